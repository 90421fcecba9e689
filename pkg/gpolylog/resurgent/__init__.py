"""The module :mod:`gpolylog.resurgent` extracts the exponentially small
residual of G on the negative real axis after optimal truncation of its
asymptotic expansion."""

from .residual import ResidualSample, truncated_sum, s_of_u, s_predicted, \
    required_digits, half_fraction, truncation_coefficient, RESIDUAL_RANGE

__all__ = [
    "ResidualSample",
    "truncated_sum",
    "s_of_u",
    "s_predicted",
    "required_digits",
    "half_fraction",
    "truncation_coefficient",
    "RESIDUAL_RANGE"
    ]
