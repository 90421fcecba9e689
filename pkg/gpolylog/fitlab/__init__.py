"""The module :mod:`gpolylog.fitlab` recovers the exact constants
:math:`P_k(0)` from high-precision samples of the residual :math:`S(u)`, and
the constants :math:`C` and :math:`R` of the large-k form of :math:`P_k`
from exact derivative data."""

from .config import FitConfig, minimal_digits
from .sampling import ResidualSampler, sample_residuals
from .peeling import ConstantPeeler, FitReport, peel_constants, rationalize, \
    fit_constants, odd_u_validation, holdout_bound, smooth_numbers
from .constants import ConstantsEstimate, phase_amplitude, extract_CR, \
    constants_from_phases, unwrap_differences, conjecture_residual, \
    model_amplitude, matching_digits, REFERENCE_C, REFERENCE_R

__all__ = [
    "FitConfig",
    "minimal_digits",
    "ResidualSampler",
    "sample_residuals",
    "ConstantPeeler",
    "FitReport",
    "peel_constants",
    "rationalize",
    "fit_constants",
    "odd_u_validation",
    "holdout_bound",
    "smooth_numbers",
    "ConstantsEstimate",
    "phase_amplitude",
    "extract_CR",
    "constants_from_phases",
    "unwrap_differences",
    "conjecture_residual",
    "model_amplitude",
    "matching_digits",
    "REFERENCE_C",
    "REFERENCE_R"
    ]
