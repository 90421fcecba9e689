"""Assembled tables of the polynomials P_k and their serialisation."""
# License: GNU AGPLv3

import logging
from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral

from sympy import primerange
from sympy.ntheory import factorint

from .antidifference import antidifference
from .deltas import delta_table
from .polynomial import RationalPolynomial
from ..exceptions import SmoothnessError, MissingConstantsError

logger = logging.getLogger(__name__)

BUILTIN_CONSTANTS = (
    Fraction(-2, 3),
    Fraction(47, 2160),
    Fraction(-433, 24192),
    Fraction(28583, 2488320)
    )


def smoothness_bound(k):
    """Largest prime allowed in the denominators of :math:`P_k`."""
    return 2 * k + 3


def _rough_part(n, bound):
    n = abs(int(n))
    for p in primerange(2, bound + 1):
        while n % p == 0:
            n //= p
    return n


def largest_rough_factor(n, bound):
    """Largest factor of `n` exceeding `bound` found by trial division up
    to a million, or ``None`` when `n` is `bound`-smooth."""
    rough = _rough_part(n, bound)
    if rough == 1:
        return None
    return max(factorint(rough, limit=10 ** 6))


def is_smooth(n, bound):
    """Whether no prime larger than `bound` divides `n`."""
    return _rough_part(n, bound) == 1


def check_smoothness(poly, k):
    """Raise :class:`SmoothnessError` when a coefficient denominator of
    `poly` has a prime factor larger than :math:`2k + 3`."""
    bound = smoothness_bound(k)
    for denominator in set(poly.denominators()):
        prime = largest_rough_factor(denominator, bound)
        if prime is not None:
            raise SmoothnessError(
                f"P_{k} has a coefficient denominator divisible by {prime}, "
                f"which exceeds {bound}; its constant term is likely wrong.",
                k=k, prime=prime)


@dataclass(frozen=True)
class PolyTable:
    """Immutable table of difference polynomials, their antidifferences and
    optionally the constant terms closing :math:`P_k = F_k + P_k(0)`.

    Parameters
    ----------
    deltas : tuple of RationalPolynomial
        :math:`\\Delta_0, \\ldots, \\Delta_K`.

    antidiffs : tuple of RationalPolynomial
        :math:`F_0, \\ldots, F_K` with :math:`F_k(0) = 0`.

    constants : tuple of Fraction or None
        :math:`P_0(0), \\ldots, P_K(0)`.

    """
    deltas: tuple
    antidiffs: tuple
    constants: tuple = None

    @property
    def K(self):
        return len(self.deltas) - 1

    @property
    def polys(self):
        """:math:`P_0, \\ldots, P_K`."""
        if self.constants is None:
            raise MissingConstantsError(
                "This table has no constant terms P_k(0).")
        return [f + c for f, c in zip(self.antidiffs, self.constants)]

    def to_text(self):
        """One line per :math:`P_k`, see
        :meth:`RationalPolynomial.to_text`."""
        return "".join(p.to_text() + "\n" for p in self.polys)

    @classmethod
    def from_text(cls, text):
        """Rebuild a table from the output of :meth:`to_text`."""
        polys = [RationalPolynomial.from_text(line)
                 for line in text.splitlines() if line.strip()]
        return cls(tuple(p.shift(1) - p for p in polys),
                   tuple(p - p.coefficient(0) for p in polys),
                   tuple(p.coefficient(0) for p in polys))


def assemble(K, constants=None):
    """Build :math:`P_k = F_k + P_k(0)` for :math:`k \\leq K`.

    Parameters
    ----------
    K : int, required
        Highest index.

    constants : sequence of rational scalars or None, optional, \
        default: ``None``
        :math:`P_0(0), \\ldots, P_K(0)`. When ``None``, only the
        differences and antidifferences are tabulated.

    Returns
    -------
    table : :class:`PolyTable`

    Raises
    ------
    SmoothnessError
        If a denominator of some :math:`P_k` has a prime factor larger than
        :math:`2k + 3`.

    Examples
    --------
    >>> from gpolylog.polyengine import assemble, BUILTIN_CONSTANTS
    >>> print(assemble(1, BUILTIN_CONSTANTS[:2]).polys[1])
    47/2160 + 7/24*x - x^2 + 2/3*x^3

    """
    if not isinstance(K, Integral) or K < 0:
        raise ValueError(f"Parameter `K` is {K!r}, which is not a "
                         f"non-negative integer.")
    deltas = tuple(delta_table(K))
    antidiffs = tuple(antidifference(delta) for delta in deltas)
    if constants is None:
        return PolyTable(deltas, antidiffs)
    constants = tuple(Fraction(c) for c in constants)
    if len(constants) != K + 1:
        raise ValueError(f"{len(constants)} constants given, {K + 1} are "
                         f"needed for K = {K}.")
    table = PolyTable(deltas, antidiffs, constants)
    for k, poly in enumerate(table.polys):
        if poly.degree != 2 * k + 1:
            raise ValueError(f"P_{k} has degree {poly.degree}, expected "
                             f"{2 * k + 1}.")
        check_smoothness(poly, k)
    logger.info("Assembled P_0..P_%d", K)
    return table


def denominator_ratio(constants):
    """Ratios :math:`D_k / D_{k-1}` of the denominators of consecutive
    constant terms :math:`P_k(0) = N_k / D_k`, for :math:`k \\geq 1`."""
    constants = [Fraction(c) for c in constants]
    return [Fraction(b.denominator, a.denominator)
            for a, b in zip(constants[:-1], constants[1:])]


def write_constants(constants, path):
    """Write one ``k num/den`` line per constant term."""
    with open(path, "w") as stream:
        for k, c in enumerate(constants):
            c = Fraction(c)
            stream.write(f"{k} {c.numerator}/{c.denominator}\n")


def read_constants(path, K=None):
    """Read constant terms written by :func:`write_constants`.

    Raises
    ------
    MissingConstantsError
        If fewer than ``K + 1`` consecutive constants are available.

    """
    found = {}
    with open(path) as stream:
        for line in stream:
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            index, value = line.split()
            numerator, _, denominator = value.partition("/")
            found[int(index)] = Fraction(int(numerator),
                                         int(denominator or 1))
    constants = []
    while len(constants) in found:
        constants.append(found[len(constants)])
    if K is not None:
        if len(constants) <= K:
            raise MissingConstantsError(
                f"{path} holds P_k(0) for k < {len(constants)} only, "
                f"K = {K} was requested.")
        constants = constants[:K + 1]
    return constants


def write_table(table, path):
    with open(path, "w") as stream:
        stream.write(table.to_text())


def read_table(path):
    with open(path) as stream:
        return PolyTable.from_text(stream.read())
