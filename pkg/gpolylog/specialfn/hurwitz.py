"""Hurwitz zeta function of complex shift by Euler-Maclaurin summation."""
# License: GNU AGPLv3

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, factorial, lgamma, log, log10, pi as float_pi
from numbers import Integral

from mpmath import mp, mpf, mpc, power

from ..exceptions import DomainError
from ..mpcore import bernoulli, to_mpf, to_mpc

logger = logging.getLogger(__name__)

_LOG10_2 = log10(2)
_LOG10_2PI = log10(2 * float_pi)
_LN10 = log(10)


@dataclass(frozen=True)
class HurwitzParams:
    """Euler-Maclaurin parameters for one evaluation of
    :math:`\\zeta(s, a)`.

    Parameters
    ----------
    s : real scalar
        Exponent, larger than 1.

    a : complex scalar
        Shift, with positive real part.

    em_terms : int
        Number `N` of directly summed terms.

    em_order : int
        Number `M` of Bernoulli corrections.

    """
    s: object
    a: object
    em_terms: int
    em_order: int

    def __post_init__(self):
        for name in ('em_terms', 'em_order'):
            value = getattr(self, name)
            if not isinstance(value, Integral) or value < 1:
                raise ValueError(f"Parameter `{name}` is {value!r}, which "
                                 f"is not a positive integer.")
        a = complex(self.a)
        if not a.real + self.em_terms > abs(a.imag):
            raise ValueError(
                f"Euler-Maclaurin remainder does not decay for a = {a} "
                f"with em_terms = {self.em_terms}.")

    def refined(self):
        """Parameters ``(2N, M + 4)``, used to verify a result."""
        return HurwitzParams(self.s, self.a, 2 * self.em_terms,
                             self.em_order + 4)


@lru_cache(maxsize=None)
def _bernoulli_factor(j):
    """B_{2j} / (2j)! as an exact rational."""
    return bernoulli(2 * j) / Fraction(factorial(2 * j))


def _log10_correction(s, j, distance):
    """Float estimate of log10 of the j-th Bernoulli correction, using
    |B_{2j}| / (2j)! ~ 2 / (2 pi)^(2j)."""
    return (_LOG10_2 - 2 * j * _LOG10_2PI
            + (lgamma(s + 2 * j - 1) - lgamma(s)) / _LN10
            - (s + 2 * j - 1) * log10(distance))


def hurwitz_params(s, a, digits):
    """Choose Euler-Maclaurin parameters reaching `digits` decimal digits.

    Starting from the smallest `N` for which the remainder decays, the
    correction terms are estimated in floating point and the first order
    `M` whose term falls below ``10**(-digits)`` is taken. When the terms
    start growing before that, or `M` would exceed ``digits // 2``, `N` is
    doubled and the search repeated.

    Parameters
    ----------
    s : real scalar
        Exponent, larger than 1.

    a : complex scalar
        Shift, with positive real part.

    digits : int
        Target number of correct decimal digits.

    Returns
    -------
    params : :class:`HurwitzParams`

    """
    s_float = float(s)
    a_complex = complex(a)
    max_order = max(4, digits // 2)
    n_terms = max(1, ceil(abs(a_complex.imag) - a_complex.real) + 1)
    while True:
        distance = abs(n_terms + a_complex)
        previous = None
        for j in range(1, max_order + 1):
            size = _log10_correction(s_float, j, distance)
            if size < -digits:
                logger.debug("Hurwitz sizing for a=%s: N=%d, M=%d",
                             a_complex, n_terms, j)
                return HurwitzParams(s, a, n_terms, j)
            if previous is not None and size > previous:
                break
            previous = size
        n_terms *= 2


def _euler_maclaurin(s, a, n_terms, order):
    """Return the Euler-Maclaurin value and the float sum of the moduli of
    the directly summed terms, which scales the rounding error."""
    total = mpc(0)
    magnitude = 0.
    for n in range(n_terms):
        term = power(n + a, -s)
        total += term
        magnitude += abs(complex(term))
    w = n_terms + a
    w_pow = power(w, -s)
    total += w * w_pow / (s - 1) + w_pow / 2
    inv_w2 = 1 / (w * w)
    term_power = w_pow / w
    rising = s
    for j in range(1, order + 1):
        total += to_mpf(_bernoulli_factor(j)) * rising * term_power
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        term_power *= inv_w2
    return total, magnitude + abs(complex(total))


def hurwitz_zeta(s, a, ctx, params=None):
    """Hurwitz zeta function :math:`\\zeta(s, a) = \\sum_{n \\geq 0}
    (n + a)^{-s}` for real :math:`s > 1` and complex `a` with positive real
    part, powers taken on the principal branch.

    Parameters
    ----------
    s : real scalar, required
        Exponent. Exact rationals are converted at working precision.

    a : complex scalar, required
        Shift.

    ctx : :class:`gpolylog.mpcore.PrecisionContext`, required
        Working precision.

    params : :class:`HurwitzParams` or None, optional, default: ``None``
        Euler-Maclaurin parameters overriding the automatic sizing, e.g.
        ``hurwitz_params(...).refined()`` to verify a value.

    Returns
    -------
    value : :class:`mpmath.mpc`

    Raises
    ------
    DomainError
        If ``s <= 1`` or ``Re(a) <= 0``.

    Examples
    --------
    >>> from gpolylog.mpcore import PrecisionContext
    >>> from gpolylog.specialfn import hurwitz_zeta
    >>> ctx = PrecisionContext(30)
    >>> print(ctx.nstr(hurwitz_zeta(1.5, 1, ctx).real, 11))
    2.6123753487

    """
    with ctx.workdps():
        value, _, _ = _hurwitz(s, a, ctx, params)
        return value


def _hurwitz(s, a, ctx, params):
    s = to_mpf(s)
    a = to_mpc(a)
    if not s > 1:
        raise DomainError(f"Parameter `s` is {mp.nstr(s, 10)}, the "
                          f"Hurwitz zeta series needs s > 1.")
    if not a.real > 0:
        raise DomainError(f"Parameter `a` is {mp.nstr(a, 10)}, the "
                          f"Hurwitz zeta series needs Re(a) > 0.")
    if params is None:
        params = hurwitz_params(s, a, ctx.working_digits)
    value, magnitude = _euler_maclaurin(s, a, params.em_terms,
                                        params.em_order)
    return value, magnitude, params


def hurwitz_zeta_with_bound(s, a, ctx):
    """Hurwitz zeta value together with an absolute error estimate.

    The estimate adds the size of the first omitted Bernoulli correction to
    a rounding allowance of ``N + M + 10`` units in the last working place,
    scaled by the moduli of the summed terms.

    Returns
    -------
    value : :class:`mpmath.mpc`

    err : :class:`mpmath.mpf`

    """
    with ctx.workdps():
        value, magnitude, params = _hurwitz(s, a, ctx, None)
        distance = abs(complex(params.em_terms + params.a))
        omitted = _log10_correction(float(params.s), params.em_order + 1,
                                    distance)
        rounding = (params.em_terms + params.em_order + 10) \
            * ctx.working_eps * (1 + mpf(magnitude))
        return value, mpf(10) ** omitted + rounding
