"""Optimal truncation of the negative-axis expansion of G and the
exponentially small residual S(u)."""
# License: GNU AGPLv3

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor, log10, e as float_e
from numbers import Integral, Rational

from mpmath import mpf, sqrt, pi, exp, floor as mp_floor

from ..exceptions import PrecisionError, DomainError
from ..gfunc import g_negative_axis
from ..mpcore import gamma_half_rational, to_mpf
from ..specialfn import eta_even_rational

logger = logging.getLogger(__name__)

_LOG10_E = log10(float_e)
RESIDUAL_RANGE = (-0.7, 0.4)


@dataclass(frozen=True)
class ResidualSample:
    """One evaluation of the residual :math:`S(u)`.

    Parameters
    ----------
    u : int, :class:`fractions.Fraction` or :class:`mpmath.mpf`
        Abscissa, positive.

    x : :class:`fractions.Fraction` or :class:`mpmath.mpf`
        Fractional part of :math:`u / 2`, exact when `u` is rational.

    s : :class:`mpmath.mpf`
        The residual.

    digits_effective : int
        Decimal digits of `s` surviving the cancellation.

    """
    u: object
    x: object
    s: object
    digits_effective: int


def _positive(u):
    if isinstance(u, Integral):
        u = int(u)
    elif isinstance(u, Rational):
        u = Fraction(u)
    else:
        u = mpf(u)
    if not u > 0:
        raise DomainError(f"Parameter `u` is {u}, which is not positive.")
    return u


def half_fraction(u):
    """:math:`x = u/2 - \\lfloor u/2 \\rfloor`, an exact
    :class:`fractions.Fraction` for rational `u`."""
    if isinstance(u, Rational):
        half = Fraction(u) / 2
        return half - floor(half)
    return u / 2 - mp_floor(u / 2)


@lru_cache(maxsize=None)
def truncation_coefficient(n):
    """Exact rational :math:`q_n` with
    :math:`\\eta(2n) \\Gamma(2n + 1/2) = q_n \\pi^{2n} \\sqrt{\\pi}`."""
    return eta_even_rational(n) * gamma_half_rational(2 * n)


def truncated_sum(u, ctx):
    """Optimally truncated negative-axis expansion

    .. math::
        -\\frac{2}{\\pi \\sqrt{u}} \\sum_{n=0}^{\\lfloor u/2 \\rfloor}
        \\eta(2n) \\Gamma(2n + \\tfrac12) u^{-2n},

    assembled from exact rationals times powers of :math:`\\pi`. Every
    summand is positive, so the result is negative.

    Parameters
    ----------
    u : real scalar, required
        Positive abscissa, :math:`z = -e^u`.

    ctx : :class:`gpolylog.mpcore.PrecisionContext`, required
        Working precision.

    Returns
    -------
    value : :class:`mpmath.mpf`

    """
    u = _positive(u)
    with ctx.workdps():
        return -2 / (pi * sqrt(to_mpf(u))) * _truncated_series(u, ctx)


def _truncated_series(u, ctx):
    """The sum alone, without the prefactor."""
    u_mp = to_mpf(u)
    ratio = pi ** 2 / u_mp ** 2
    total = mpf(0)
    power = mpf(1)
    for n in range(int(floor(u / 2)) + 1):
        total += to_mpf(truncation_coefficient(n)) * power
        power *= ratio
    return sqrt(pi) * total


def required_digits(u, target_digits, guard):
    """Smallest quoted precision keeping `target_digits` digits of
    :math:`S(u)` through the :math:`e^{-u}` cancellation."""
    return int(ceil(float(u) * _LOG10_E)) + target_digits + guard


def s_of_u(u, ctx, target_digits=10):
    """Residual :math:`S(u)` defined by

    .. math::
        G(-e^u) = -\\frac{2}{\\pi\\sqrt{u}} \\left[\\sum_{n=0}^{\\lfloor u/2
        \\rfloor} \\eta(2n) \\Gamma(2n + \\tfrac12) u^{-2n}
        + \\sqrt{2\\pi} e^{-u} S(u)\\right].

    The leading terms are of order :math:`u^{-1/2}` while the signal is of
    order :math:`e^{-u}`, so `ctx` must carry at least
    :math:`u \\log_{10} e` + `target_digits` + ``ctx.guard`` digits.

    Parameters
    ----------
    u : real scalar, required
        Positive abscissa. Integers and :class:`fractions.Fraction` give an
        exact `x`.

    ctx : :class:`gpolylog.mpcore.PrecisionContext`, required
        Working precision.

    target_digits : int, optional, default: ``10``
        Digits of :math:`S(u)` that must survive.

    Returns
    -------
    sample : :class:`ResidualSample`

    Raises
    ------
    PrecisionError
        If the precision budget is not met.

    """
    u = _positive(u)
    needed = required_digits(u, target_digits, ctx.guard)
    if ctx.digits < needed:
        raise PrecisionError(
            f"S(u) at u = {float(u)} needs at least {needed} digits to keep "
            f"{target_digits} after cancellation, got {ctx.digits}.")
    with ctx.workdps():
        u_mp = to_mpf(u)
        g_value = g_negative_axis(u_mp, ctx).value.real
        bracket = pi * sqrt(u_mp) / 2 * g_value + _truncated_series(u, ctx)
        s = -exp(u_mp) / sqrt(2 * pi) * bracket
    digits_effective = int(floor(ctx.digits - float(u) * _LOG10_E
                                 - ctx.guard))
    if not RESIDUAL_RANGE[0] < s < RESIDUAL_RANGE[1]:
        logger.warning("S(%s) = %s lies outside the observed range %s.",
                       float(u), ctx.nstr(s, 15), RESIDUAL_RANGE)
    return ResidualSample(u, half_fraction(u), s, digits_effective)


def s_predicted(u, polys, ctx):
    """Prediction :math:`\\sum_{k \\leq K} P_k(x) / u^k` of the residual at
    :math:`x = u/2 - \\lfloor u/2 \\rfloor`.

    Parameters
    ----------
    u : real scalar, required
        Positive abscissa.

    polys : sequence of :class:`gpolylog.polyengine.RationalPolynomial`
        :math:`P_0, \\ldots, P_K` with :math:`K \\leq \\lfloor u \\rfloor`.

    ctx : :class:`gpolylog.mpcore.PrecisionContext`, required
        Working precision.

    Returns
    -------
    value : :class:`mpmath.mpf`

    """
    u = _positive(u)
    K = len(polys) - 1
    if K > floor(u):
        raise ValueError(f"{K + 1} polynomials given, the expansion in 1/u "
                         f"is truncated at k = floor(u) = {floor(u)}.")
    x = half_fraction(u)
    with ctx.workdps():
        inv_u = 1 / to_mpf(u)
        total = mpf(0)
        for poly in reversed(polys):
            total = total * inv_u + to_mpf(poly(x))
        return total
