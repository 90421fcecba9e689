"""Evaluation points and results for G(z)."""
# License: GNU AGPLv3

from dataclasses import dataclass

from mpmath import log

from ..exceptions import BranchCutError
from ..mpcore import to_mpc

METHODS = ('series', 'zeta_expansion', 'bilateral', 'inversion', 'neg_axis')


@dataclass(frozen=True)
class EvalResult:
    """Value of :math:`G(z)` with an absolute error estimate.

    Parameters
    ----------
    value : :class:`mpmath.mpc`
        Computed value.

    err : :class:`mpmath.mpf`
        Claimed absolute error bound: truncation bound plus a rounding
        allowance. Heuristic, not a certified enclosure.

    method : str
        One of ``'series'``, ``'zeta_expansion'``, ``'bilateral'``,
        ``'inversion'`` and ``'neg_axis'``.

    """
    value: object
    err: object
    method: str

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"Parameter `method` is {self.method!r}, "
                             f"which is not in {METHODS}.")

    def conjugate(self):
        return EvalResult(self.value.conjugate(), self.err, self.method)


@dataclass(frozen=True)
class ZPoint:
    """A point off the branch cut :math:`[1, \\infty)` together with its
    principal logarithm, computed at the working precision of `ctx`.

    Use :meth:`from_value` to build instances. `logz` is ``None`` at
    :math:`z = 0`.

    """
    z: object
    logz: object
    ctx: object

    @classmethod
    def from_value(cls, z, ctx):
        """Validate `z` and compute its principal logarithm.

        Raises
        ------
        BranchCutError
            If `z` is real and at least 1.

        """
        with ctx.workdps():
            z = to_mpc(z)
            if z.imag == 0 and z.real >= 1:
                raise BranchCutError(
                    f"z = {z.real} lies on the branch cut [1, inf) of G.")
            return cls(z, log(z) if z else None, ctx)

    def at(self, ctx):
        """The same point with its logarithm at the precision of `ctx`."""
        if ctx == self.ctx:
            return self
        return ZPoint.from_value(self.z, ctx)

    def conjugate(self):
        with self.ctx.workdps():
            return ZPoint.from_value(self.z.conjugate(), self.ctx)

    def reciprocal(self):
        with self.ctx.workdps():
            return ZPoint.from_value(1 / self.z, self.ctx)


def as_point(z, ctx):
    """Return `z` as a :class:`ZPoint` at the precision of `ctx`."""
    if isinstance(z, ZPoint):
        return z.at(ctx)
    return ZPoint.from_value(z, ctx)


def rounding_slack(ctx, magnitude, n_ops=0):
    """Rounding allowance of ``10 + n_ops`` units in the last working place
    relative to ``1 + magnitude``."""
    with ctx.workdps():
        return (10 + n_ops) * ctx.working_eps * (1 + abs(magnitude))