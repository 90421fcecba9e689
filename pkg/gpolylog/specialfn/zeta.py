"""Riemann zeta at half-integers, its reflected values and Dirichlet eta
at even integers."""
# License: GNU AGPLv3

from fractions import Fraction
from functools import lru_cache
from math import factorial
from numbers import Integral

from mpmath import mpf, sqrt, pi, power

from .hurwitz import hurwitz_zeta
from ..mpcore import bernoulli, gamma_half, to_mpf


def _check_index(n):
    if not isinstance(n, Integral) or n < 0:
        raise ValueError(f"Parameter `n` is {n!r}, which is not a "
                         f"non-negative integer.")


@lru_cache(maxsize=None)
def zeta_half(n, ctx):
    """Riemann zeta value :math:`\\zeta(n + 3/2)`.

    Parameters
    ----------
    n : int, required
        Non-negative integer.

    ctx : :class:`gpolylog.mpcore.PrecisionContext`, required
        Working precision.

    Returns
    -------
    value : :class:`mpmath.mpf`

    """
    _check_index(n)
    with ctx.workdps():
        return hurwitz_zeta(Fraction(2 * n + 3, 2), 1, ctx).real


def reflection_sign(n):
    """Sign of :math:`\\sin((2n + 1)\\pi / 4)`: ``+1`` for n = 0, 1 and
    ``-1`` for n = 2, 3, with period 4."""
    return 1 if n % 4 < 2 else -1


@lru_cache(maxsize=None)
def zeta_neg_half(n, ctx):
    """Riemann zeta value :math:`\\zeta(-n - 1/2)` from the reflection
    formula

    .. math::
        \\zeta(-n - 1/2) = -2 \\sin\\left(\\frac{(2n+1)\\pi}{4}\\right)
        \\frac{\\Gamma(n + 3/2) \\zeta(n + 3/2)}{(2\\pi)^{n + 3/2}}.

    The sine only takes the values :math:`\\pm \\sqrt{2}/2`.

    """
    _check_index(n)
    with ctx.workdps():
        magnitude = (sqrt(2) * gamma_half(n + 1, ctx) * zeta_half(n, ctx)
                     / power(2 * pi, mpf(2 * n + 3) / 2))
        return -reflection_sign(n) * magnitude


@lru_cache(maxsize=None)
def zeta_even_rational(n):
    """Rational :math:`r` with :math:`\\zeta(2n) = r \\pi^{2n}`, for
    :math:`n \\geq 1`."""
    _check_index(n)
    if n == 0:
        return Fraction(-1, 2)
    sign = 1 if n % 2 else -1
    return sign * bernoulli(2 * n) * 2 ** (2 * n) / (2 * factorial(2 * n))


@lru_cache(maxsize=None)
def eta_even_rational(n):
    """Rational :math:`r` with :math:`\\eta(2n) = r \\pi^{2n}`.

    Examples
    --------
    >>> from gpolylog.specialfn import eta_even_rational
    >>> eta_even_rational(0), eta_even_rational(1), eta_even_rational(2)
    (Fraction(1, 2), Fraction(1, 12), Fraction(7, 720))

    """
    _check_index(n)
    if n == 0:
        return Fraction(1, 2)
    return (1 - Fraction(2) ** (1 - 2 * n)) * zeta_even_rational(n)


def eta_even(n, ctx):
    """Dirichlet eta value :math:`\\eta(2n) = (1 - 2^{1-2n}) \\zeta(2n)`,
    with :math:`\\eta(0) = 1/2`, assembled from an exact rational times
    :math:`\\pi^{2n}`."""
    with ctx.workdps():
        return to_mpf(eta_even_rational(n)) * pi ** (2 * n)
