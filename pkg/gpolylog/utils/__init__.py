"""The module :mod:`gpolylog.utils` includes validation, interval and
logging utilities shared by all sub-packages."""

from .intervals import Interval
from .validation import validate_params, check_integer_grid

__all__ = [
    "Interval",
    "validate_params",
    "check_integer_grid"
    ]
