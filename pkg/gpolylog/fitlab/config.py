"""Configuration of a constant-term fit."""
# License: GNU AGPLv3

from dataclasses import dataclass, asdict
from math import ceil, log10, e as float_e
from numbers import Integral, Real

import numpy as np

from ..mpcore import PrecisionContext, DEFAULT_GUARD
from ..utils.intervals import Interval
from ..utils.validation import validate_params

_FIT_CONFIG_PARAMETERS = {
    'u_min': {'type': Integral, 'in': Interval(2, np.inf, closed='left')},
    'u_max': {'type': Integral, 'in': Interval(2, np.inf, closed='left')},
    'count': {'type': Integral, 'in': Interval(2, np.inf, closed='left')},
    'digits': {'type': Integral, 'in': Interval(30, np.inf, closed='left')},
    'K': {'type': Integral, 'in': Interval(0, np.inf, closed='left')},
    'holdout': {'type': Real, 'in': Interval(0, 1, closed='left')},
    'guard': {'type': Integral, 'in': Interval(10, np.inf, closed='left')}
    }


def minimal_digits(u_max, u_min, K):
    """Smallest precision accepted by :class:`FitConfig`:
    :math:`u_\\mathrm{max} \\log_{10} e + 1.5 K \\log_{10} u_\\mathrm{min}
    + 50`."""
    return int(ceil(u_max * log10(float_e) + 1.5 * K * log10(u_min) + 50))


@dataclass(frozen=True)
class FitConfig:
    """Immutable description of the sampling grid and the precision of a
    fit of the constant terms :math:`P_k(0)`.

    Samples are taken at `count` even integers spread evenly over
    ``[u_min, u_max]``, where :math:`x = 0` identically.

    Parameters
    ----------
    u_min, u_max : int, optional, defaults: ``402``, ``600``
        Even ends of the grid. `u_min` must be at least ``4 * K``.

    count : int, optional, default: ``100``
        Number of samples, at most the number of even integers in the
        range.

    digits : int, optional, default: ``450``
        Quoted precision, at least :func:`minimal_digits`.

    K : int, optional, default: ``12``
        Highest index of the constants to recover.

    holdout : float, optional, default: ``0.1``
        Fraction of the samples kept out of the fit and used for
        validation. At least ``K + 5`` samples must remain.

    guard : int, optional, default: ``20``
        Guard digits of the working precision.

    Examples
    --------
    >>> from gpolylog.fitlab import FitConfig
    >>> cfg = FitConfig(u_min=60, u_max=78, count=10, digits=120, K=2,
    ...                 holdout=0.)
    >>> cfg.grid()
    [60, 62, 64, 66, 68, 70, 72, 74, 76, 78]

    """
    u_min: int = 402
    u_max: int = 600
    count: int = 100
    digits: int = 450
    K: int = 12
    holdout: float = 0.1
    guard: int = DEFAULT_GUARD

    def __post_init__(self):
        validate_params(self.as_dict(), _FIT_CONFIG_PARAMETERS)
        for name in ('u_min', 'u_max'):
            if getattr(self, name) % 2:
                raise ValueError(f"Parameter `{name}` is "
                                 f"{getattr(self, name)}, which is not "
                                 f"even.")
        if self.u_max <= self.u_min:
            raise ValueError(f"`u_max` = {self.u_max} must exceed `u_min` = "
                             f"{self.u_min}.")
        if self.u_min < 4 * self.K:
            raise ValueError(f"`u_min` = {self.u_min} is below 4 * K = "
                             f"{4 * self.K}, outside the asymptotic regime.")
        available = (self.u_max - self.u_min) // 2 + 1
        if self.count > available:
            raise ValueError(f"`count` = {self.count} exceeds the {available} "
                             f"even integers in [{self.u_min}, "
                             f"{self.u_max}].")
        needed = minimal_digits(self.u_max, self.u_min, self.K)
        if self.digits < needed:
            raise ValueError(f"`digits` = {self.digits} is below {needed}, "
                             f"the precision needed for K = {self.K} at "
                             f"u_max = {self.u_max}.")
        if self.count - self.n_holdout < self.K + 5:
            raise ValueError(f"Only {self.count - self.n_holdout} samples "
                             f"remain for the fit, K + 5 = {self.K + 5} are "
                             f"needed.")

    @property
    def n_holdout(self):
        return int(round(self.count * self.holdout))

    @property
    def ctx(self):
        return PrecisionContext(self.digits, self.guard)

    def grid(self):
        """The `count` even abscissae, in increasing order."""
        halves = np.linspace(self.u_min // 2, self.u_max // 2, self.count)
        return [2 * int(h) for h in np.rint(halves)]

    def odd_grid(self, count=5):
        """`count` odd abscissae spread evenly over
        ``[u_min + 1, u_max - 1]``, for out-of-sample checks at
        :math:`x = 1/2`."""
        halves = np.linspace(self.u_min // 2, self.u_max // 2 - 1,
                             min(count, (self.u_max - self.u_min) // 2))
        return sorted({2 * int(h) + 1 for h in np.rint(halves)})

    def split(self, samples):
        """Split `samples`, ordered like :meth:`grid`, into the fitted part
        and the holdout part. Holdout samples are spread evenly over the
        grid."""
        n_holdout = self.n_holdout
        if not n_holdout:
            return list(samples), []
        step = len(samples) // n_holdout
        held = set(range(step // 2, len(samples), step)[:n_holdout])
        fitted = [s for i, s in enumerate(samples) if i not in held]
        holdout = [s for i, s in enumerate(samples) if i in held]
        return fitted, holdout

    def as_dict(self):
        return asdict(self)
