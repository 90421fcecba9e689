"""The module :mod:`gpolylog.polyengine` builds, in exact rational
arithmetic, the polynomials :math:`P_k` describing the large-u expansion of
the residual :math:`S(u)`."""

from .polynomial import RationalPolynomial
from .series import USeries
from .deltas import delta_table, g_sequence, resurgence_residual, \
    delta_sinusoid_check
from .antidifference import antidifference, bernoulli_polynomial, \
    p_prime_values, mean_constant
from .table import PolyTable, assemble, denominator_ratio, check_smoothness, \
    is_smooth, smoothness_bound, read_constants, write_constants, \
    read_table, write_table, BUILTIN_CONSTANTS

__all__ = [
    "RationalPolynomial",
    "USeries",
    "delta_table",
    "g_sequence",
    "resurgence_residual",
    "delta_sinusoid_check",
    "antidifference",
    "bernoulli_polynomial",
    "p_prime_values",
    "mean_constant",
    "PolyTable",
    "assemble",
    "denominator_ratio",
    "check_smoothness",
    "is_smooth",
    "smoothness_bound",
    "read_constants",
    "write_constants",
    "read_table",
    "write_table",
    "BUILTIN_CONSTANTS"
    ]
