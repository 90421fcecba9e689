"""Working-precision contract shared by every numerical routine."""
# License: GNU AGPLv3

from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral, Rational

from mpmath import mp, mpf, mpc

from ..utils.intervals import Interval
from ..utils.validation import validate_params

DEFAULT_GUARD = 20

_CONTEXT_PARAMETERS = {
    'digits': {'type': Integral,
               'in': Interval(30, float('inf'), closed='left')},
    'guard': {'type': Integral,
              'in': Interval(10, float('inf'), closed='left')}
    }


@dataclass(frozen=True)
class PrecisionContext:
    """Decimal working precision for a computation.

    Computations run with ``digits + guard`` significant decimal digits, but
    every error bound and every comparison in the package refers to
    `digits` only. Instances are immutable, hashable and picklable, so they
    can be used as cache keys and shipped to :mod:`joblib` workers.

    Parameters
    ----------
    digits : int, required
        Number of decimal digits the results are quoted to. Must be at
        least 30.

    guard : int, optional, default: ``20``
        Extra decimal digits carried internally. Must be at least 10.

    Examples
    --------
    >>> from mpmath import mp, zeta
    >>> from gpolylog.mpcore import PrecisionContext
    >>> ctx = PrecisionContext(50)
    >>> with ctx.workdps():
    ...     value = zeta(1.5)
    >>> ctx.working_digits
    70

    """
    digits: int
    guard: int = DEFAULT_GUARD

    def __post_init__(self):
        validate_params({'digits': self.digits, 'guard': self.guard},
                        _CONTEXT_PARAMETERS)
        object.__setattr__(self, 'digits', int(self.digits))
        object.__setattr__(self, 'guard', int(self.guard))

    @property
    def working_digits(self):
        return self.digits + self.guard

    def workdps(self):
        """Context manager setting mpmath's global precision to
        ``digits + guard`` decimal digits."""
        return mp.workdps(self.working_digits)

    @property
    def eps(self):
        """Unit of the last quoted place, ``10**(-digits)``."""
        with self.workdps():
            return mpf(10) ** (-self.digits)

    @property
    def working_eps(self):
        with self.workdps():
            return mpf(10) ** (-self.working_digits)

    def doubled(self):
        """Context with twice the quoted digits and the same guard."""
        return PrecisionContext(2 * self.digits, self.guard)

    def round(self, value):
        """Round a real or complex mpmath number to `digits` digits."""
        with mp.workdps(self.digits):
            return +value

    def agree(self, a, b, ulps=2):
        """Whether `a` and `b` agree within `ulps` units of the last quoted
        place, relative to ``max(1, |a|)``."""
        with self.workdps():
            scale = max(mpf(1), abs(a))
            return abs(a - b) <= ulps * self.eps * scale

    def nstr(self, value, digits=None):
        """Decimal string of `value` with `digits` significant digits,
        independent of the current locale."""
        with self.workdps():
            return mp.nstr(value, self.digits if digits is None else digits,
                           strip_zeros=False)


def to_mpf(value):
    """Convert an exact rational or an integer to an mpmath real at the
    current working precision."""
    if isinstance(value, Integral):
        return mpf(int(value))
    if isinstance(value, Rational):
        return mpf(int(value.numerator)) / int(value.denominator)
    return mpf(value)


def to_fraction(value):
    """Exact :class:`fractions.Fraction` of a binary floating number
    (mpmath real, float or int)."""
    if isinstance(value, Rational):
        return Fraction(value)
    value = mpf(value)
    if value < 0:
        return -to_fraction(-value)
    man, exp = value.man_exp
    if exp >= 0:
        return Fraction(int(man) << int(exp))
    return Fraction(int(man), 1 << int(-exp))


def to_mpc(value):
    """Convert a Python or mpmath number to an mpmath complex."""
    if isinstance(value, Rational):
        return mpc(to_mpf(value))
    return mpc(value)
