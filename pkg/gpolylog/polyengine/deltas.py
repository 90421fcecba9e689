"""Difference polynomials, the g sequence and its resurgence relations."""
# License: GNU AGPLv3

import logging
import threading
from fractions import Fraction
from math import comb, factorial
from numbers import Integral

from mpmath import mpf, sin, pi, gamma

from .polynomial import RationalPolynomial
from .series import USeries
from ..mpcore import bernoulli, to_mpf

logger = logging.getLogger(__name__)

_T_TO_X = (Fraction(2), Fraction(1, 2))  # t = 2x + 1/2
_DELTA_CACHE = []
_DELTA_LOCK = threading.Lock()


def _check_order(K, name='K'):
    if not isinstance(K, Integral) or K < 0:
        raise ValueError(f"Parameter `{name}` is {K!r}, which is not a "
                         f"non-negative integer.")
    return int(K)


def _odd_bernoulli_coefficient(j):
    """Coefficient of y^j in sum_n B_{2n} y^{2n-1} / (2n (2n - 1))."""
    if j % 2 == 0:
        return Fraction(0)
    return bernoulli(j + 1) / ((j + 1) * j)


def g_sequence(K):
    """Coefficients :math:`g_0, \\ldots, g_K` of

    .. math::
        \\sum_{k \\geq 0} g_k y^k = \\exp\\left(\\sum_{n > 0}
        \\frac{B_{2n} y^{2n-1}}{2n(2n-1)}\\right),

    the Stirling series of the Gamma function. They equal
    :math:`\\Delta_k(-1/4)`.

    Parameters
    ----------
    K : int, required
        Highest index.

    Returns
    -------
    g : list of :class:`fractions.Fraction`

    Examples
    --------
    >>> from gpolylog.polyengine import g_sequence
    >>> [str(g) for g in g_sequence(4)]
    ['1', '1/12', '1/288', '-139/51840', '-571/2488320']

    """
    K = _check_order(K)
    beta = [_odd_bernoulli_coefficient(j) for j in range(K + 1)]
    g = [Fraction(1)]
    for k in range(1, K + 1):
        acc = sum((j * beta[j] * g[k - j] for j in range(1, k + 1, 2)),
                  Fraction(0))
        g.append(acc / k)
    return g


def _dlog_series(K):
    """Right side of the logarithmic form of the difference series,
    as a series in 1/u with polynomial coefficients in t:

    t + (u + 1/2 - t) log(1 - t/u) + sum_n B_{2n} / (2n (2n - 1))
    (u - t)^{-(2n - 1)}.
    """
    t = RationalPolynomial([0, 1])
    one_minus_ty = USeries([1, -t], K + 1)
    log_part = one_minus_ty.log()
    series = log_part.times_u() + log_part.truncate(K) * (Fraction(1, 2) - t)
    series = series + t
    coefficients = list(series.coefficients)
    # (u - t)^{-(2n-1)} = u^{-(2n-1)} sum_i C(2n - 2 + i, i) t^i u^{-i}
    for n in range(1, (K + 1) // 2 + 1):
        weight = bernoulli(2 * n) / (2 * n * (2 * n - 1))
        for i in range(K - (2 * n - 1) + 1):
            coefficients[2 * n - 1 + i] += RationalPolynomial.monomial(
                i, weight * comb(2 * n - 2 + i, i))
    return USeries(coefficients, K)


def _delta_table_series(K):
    deltas_t = _dlog_series(K).exp()
    return [c.compose_linear(*_T_TO_X) for c in deltas_t.coefficients]


def _poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    result = list(a)
    for i, c in enumerate(b):
        result[i] += c
    return result


def _poly_compose_t(coefficients):
    """Substitute t = 2x + 1/2 by Horner's rule on a coefficient list."""
    result = []
    for c in reversed(coefficients):
        # result * (2x + 1/2) + c
        shifted = [Fraction(0)] + [2 * r for r in result]
        for i, r in enumerate(result):
            shifted[i] += r / 2
        shifted[0] += c
        result = shifted
    return RationalPolynomial(result)


def _phi_polynomials(K):
    """Coefficients phi_m(t) of (1 - w)^{1/2} exp(t psi(w)), with
    psi(w) = sum_j w^j / (j (j + 1)), as coefficient lists in t."""
    e = [[Fraction(1)]]
    for m in range(1, K + 1):
        acc = []
        for j in range(1, m + 1):
            acc = _poly_add(acc, [c / (j + 1) for c in e[m - j]])
        e.append([Fraction(0)] + [c / m for c in acc])
    # C(1/2, l) (-1)^l
    binomial = [Fraction(1)]
    for i in range(1, K + 1):
        binomial.append(-binomial[-1] * (Fraction(1, 2) - (i - 1)) / i)
    phi = []
    for m in range(K + 1):
        acc = []
        for i in range(m + 1):
            acc = _poly_add(acc, [binomial[i] * c for c in e[m - i]])
        phi.append(acc)
    return phi


def _delta_table_stirling(K):
    """Delta_k from the factorisation

    sum_k Delta_k y^k = Phi(t y, t) sum_j g_j y^j (1 - t y)^{-j},

    which gives Delta_k = sum_{s<k} g_{k-s} t^s Psi(k-1, s) + t^k phi_k with
    Psi(n, s) = sum_{m<=s} C(n - m, s - m) phi_m, obtained row by row from
    Psi(n, s) = Psi(n-1, s) + Psi(n-1, s-1).
    """
    g = g_sequence(K)
    phi = _phi_polynomials(K)
    prefix = [[Fraction(1)]]
    for m in range(1, K + 1):
        prefix.append(_poly_add(prefix[-1], phi[m]))
    deltas_t = [[Fraction(1)]]
    row = [[Fraction(1)]]  # Psi(0, .)
    for k in range(1, K + 1):
        n = k - 1
        if n > 0:
            row = [[Fraction(1)]] \
                + [_poly_add(row[s], row[s - 1]) for s in range(1, n)] \
                + [prefix[n]]
        acc = [Fraction(0)] * k + phi[k]
        for s in range(k):
            weight = g[k - s]
            if weight:
                for i, c in enumerate(row[s]):
                    acc[s + i] += weight * c
        deltas_t.append(acc)
        logger.debug("Delta_%d assembled", k)
    return [_poly_compose_t(d) for d in deltas_t]


def delta_table(K, method='stirling'):
    """Difference polynomials :math:`\\Delta_0(x), \\ldots, \\Delta_K(x)` in

    .. math::
        \\log \\sum_{k \\geq 0} \\frac{\\Delta_k(x)}{u^k} \\sim
        t + (u + \\tfrac12 - t) \\log\\left(1 - \\frac{t}{u}\\right)
        + \\sum_{n > 0} \\frac{B_{2n}}{2n(2n-1)} (u - t)^{-(2n-1)},
        \\quad t = 2x + \\tfrac12.

    Parameters
    ----------
    K : int, required
        Highest index.

    method : ``'stirling'`` | ``'series'``, optional, default: \
        ``'stirling'``
        ``'series'`` expands the right side as a :class:`USeries`, then
        exponentiates it; its cost grows like :math:`K^4`.
        ``'stirling'`` separates the Stirling series of the Gamma function,
        whose coefficients are :func:`g_sequence`, from a factor depending
        on :math:`t u^{-1}` only, and costs :math:`O(K^3)`. Both return
        identical tables. Results of the default route are cached.

    Returns
    -------
    deltas : list of :class:`RationalPolynomial`
        :math:`\\Delta_0 = 1` and :math:`\\deg \\Delta_k = 2k`.

    Examples
    --------
    >>> from gpolylog.polyengine import delta_table
    >>> print(delta_table(1)[1])
    -1/24 + 2*x^2

    """
    K = _check_order(K)
    if method == 'series':
        return _delta_table_series(K)
    if method != 'stirling':
        raise ValueError(f"Parameter `method` is {method!r}, which is not "
                         f"in ('stirling', 'series').")
    with _DELTA_LOCK:
        if len(_DELTA_CACHE) <= K:
            logger.info("Computing difference polynomials up to k = %d", K)
            _DELTA_CACHE[:] = _delta_table_stirling(K)
        return _DELTA_CACHE[:K + 1]


def resurgence_residual(m, parity, ctx, relative=True):
    """Residual of the optimally truncated resurgence relations of the g
    sequence,

    .. math::
        g_{2m} \\sim -2 \\sum_{n=0}^{\\lfloor m/2 \\rfloor}
        \\frac{\\Gamma(2m - 2n - 1) g_{2n+1}}{(2\\pi i)^{2m-2n}}, \\quad
        g_{2m-1} \\sim -2 \\sum_{n=0}^{\\lfloor m/2 \\rfloor}
        \\frac{\\Gamma(2m - 2n - 1) g_{2n}}{(2\\pi i)^{2m-2n}}.

    Since :math:`(2\\pi i)^{2j} = (-1)^j (2\\pi)^{2j}`, both estimates are
    real.

    Parameters
    ----------
    m : int, required
        At least 2.

    parity : ``'even'`` | ``'odd'``, required
        Whether the target is :math:`g_{2m}` or :math:`g_{2m-1}`.

    ctx : :class:`gpolylog.mpcore.PrecisionContext`, required
        Working precision.

    relative : bool, optional, default: ``True``
        Whether to divide by :math:`|g_\\mathrm{target}|`.

    Returns
    -------
    residual : :class:`mpmath.mpf`

    """
    if not isinstance(m, Integral) or m < 2:
        raise ValueError(f"Parameter `m` is {m!r}, which is not an integer "
                         f"of at least 2.")
    if parity not in ('even', 'odd'):
        raise ValueError(f"Parameter `parity` is {parity!r}, which is not in "
                         f"('even', 'odd').")
    g = g_sequence(2 * m)
    target = g[2 * m] if parity == 'even' else g[2 * m - 1]
    offset = 1 if parity == 'even' else 0
    with ctx.workdps():
        estimate = mpf(0)
        for n in range(m // 2 + 1):
            j = m - n
            power = (-1) ** j * (2 * pi) ** (2 * j)
            estimate += factorial(2 * j - 2) * to_mpf(g[2 * n + offset]) \
                / power
        estimate *= -2
        residual = abs(to_mpf(target) - estimate)
        if relative:
            residual /= abs(to_mpf(target))
        return residual


def delta_sinusoid_check(k, x, ctx):
    """Relative deviation of :math:`\\Delta_k(x)` from its large-k form

    .. math::
        \\frac{2\\Gamma(k)}{(2\\pi)^{k+1}} \\sin\\left(4\\pi x -
        \\frac{k\\pi}{2}\\right),

    measured in units of the amplitude :math:`2\\Gamma(k)/(2\\pi)^{k+1}`;
    of order :math:`1/k`.

    Parameters
    ----------
    k : int, required
        At least 10.

    x : real scalar, required
        In :math:`(-1, 1)`.

    ctx : :class:`gpolylog.mpcore.PrecisionContext`, required
        Working precision.

    Returns
    -------
    deviation : :class:`mpmath.mpf`

    """
    if not isinstance(k, Integral) or k < 10:
        raise ValueError(f"Parameter `k` is {k!r}, which is not an integer "
                         f"of at least 10.")
    if not -1 < x < 1:
        raise ValueError(f"Parameter `x` is {x}, which is not in (-1, 1).")
    delta = delta_table(k)[k]
    with ctx.workdps():
        x_value = delta(x)
        amplitude = 2 * gamma(k) / (2 * pi) ** (k + 1)
        model = amplitude * sin(4 * pi * to_mpf(x) - k * pi / 2)
        return abs(to_mpf(x_value) - model) / amplitude
