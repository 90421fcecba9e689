"""Closed-form Gamma values at half-integers and the principal power
w**(-3/2)."""
# License: GNU AGPLv3

from fractions import Fraction
from functools import lru_cache
from math import factorial
from numbers import Integral

from mpmath import mpc, exp, log, sqrt, pi

from .context import to_mpf
from ..exceptions import DomainError


def _check_non_negative(m, name='m'):
    if not isinstance(m, Integral) or m < 0:
        raise ValueError(f"Parameter `{name}` is {m!r}, which is not a "
                         f"non-negative integer.")


@lru_cache(maxsize=None)
def gamma_half_rational(m):
    """Exact rational factor :math:`(2m)! / (4^m m!)` of
    :math:`\\Gamma(m + 1/2) / \\sqrt{\\pi}`."""
    _check_non_negative(m)
    return Fraction(factorial(2 * m), 4 ** m * factorial(m))


def gamma_half(m, ctx):
    """:math:`\\Gamma(m + 1/2)` at the precision of `ctx`.

    Parameters
    ----------
    m : int, required
        Non-negative integer.

    ctx : :class:`gpolylog.mpcore.PrecisionContext`, required
        Working precision.

    Returns
    -------
    value : :class:`mpmath.mpf`
        :math:`(2m)! \\sqrt{\\pi} / (4^m m!)`.

    Examples
    --------
    >>> from gpolylog.mpcore import PrecisionContext, gamma_half
    >>> ctx = PrecisionContext(30)
    >>> print(ctx.nstr(gamma_half(2, ctx), 12))
    1.32934038818

    """
    with ctx.workdps():
        return to_mpf(gamma_half_rational(m)) * sqrt(pi)


def cpow_neg32(w, ctx):
    """Principal branch of :math:`w^{-3/2} = \\exp(-\\tfrac{3}{2} \\log w)`.

    The logarithm is principal, with imaginary part in :math:`(-\\pi, \\pi]`,
    so that ``cpow_neg32(-1)`` is :math:`+i`.

    Raises
    ------
    DomainError
        If `w` is zero.

    """
    with ctx.workdps():
        w = mpc(w)
        if not w:
            raise DomainError("w**(-3/2) is undefined at w = 0.")
        return exp(-1.5 * log(w))
