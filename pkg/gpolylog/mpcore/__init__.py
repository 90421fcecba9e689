"""The module :mod:`gpolylog.mpcore` defines the arbitrary-precision
contract used throughout the package, together with exact Bernoulli numbers
and Gamma values at half-integers."""

from .context import PrecisionContext, DEFAULT_GUARD, to_mpf, to_mpc, \
    to_fraction
from .bernoulli import bernoulli, bernoulli_numbers
from ._functions import gamma_half, gamma_half_rational, cpow_neg32

__all__ = [
    "PrecisionContext",
    "DEFAULT_GUARD",
    "to_mpf",
    "to_mpc",
    "to_fraction",
    "bernoulli",
    "bernoulli_numbers",
    "gamma_half",
    "gamma_half_rational",
    "cpow_neg32"
    ]
