"""Exceptions raised by the numerical pipelines in :mod:`gpolylog`."""
# License: GNU AGPLv3

__all__ = [
    "DomainError",
    "BranchCutError",
    "PrecisionError",
    "SmoothnessError",
    "ReconstructionError",
    "DegenerateError",
    "UnwrapError",
    "CrossCheckError",
    "MissingConstantsError"
    ]


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of a method."""


class BranchCutError(DomainError):
    """Raised when z lies on the excluded ray [1, inf)."""


class PrecisionError(ValueError):
    """Raised before a computation whose working precision cannot survive
    the cancellation it involves."""


class SmoothnessError(ValueError):
    """Raised when a coefficient denominator of P_k has a prime factor
    larger than 2k + 3.

    Attributes
    ----------
    k : int
        Index of the offending polynomial.

    prime : int
        Smallest offending prime factor found.

    """

    def __init__(self, message, k=None, prime=None):
        super().__init__(message)
        self.k = k
        self.prime = prime


class ReconstructionError(ArithmeticError):
    """Raised when no admissible rational lies within the confidence interval
    of a fitted coefficient.

    Attributes
    ----------
    k : int
        Index of the coefficient being rationalised.

    value : :class:`mpmath.mpf`
        Fitted floating-point value.

    error : :class:`mpmath.mpf`
        Half-width of its confidence interval.

    """

    def __init__(self, message, k=None, value=None, error=None):
        super().__init__(message)
        self.k = k
        self.value = value
        self.error = error


class DegenerateError(ArithmeticError):
    """Raised when a phase cannot be defined because both derivative values
    vanish."""


class UnwrapError(ArithmeticError):
    """Raised when a consecutive phase difference is too close to 0 or 2 pi
    for unwrapping to be unambiguous."""


class CrossCheckError(ArithmeticError):
    """Raised when two evaluation methods disagree by more than the sum of
    their claimed error bounds."""


class MissingConstantsError(KeyError):
    """Raised when the constant terms P_k(0) needed for a table are not
    available."""
