"""Solving the difference equation F(x + 1) - F(x) = q(x) exactly."""
# License: GNU AGPLv3

from fractions import Fraction
from functools import lru_cache
from math import comb

from .deltas import delta_table
from .polynomial import RationalPolynomial
from ..mpcore import bernoulli, bernoulli_numbers


@lru_cache(maxsize=None)
def bernoulli_polynomial(n):
    """Bernoulli polynomial :math:`B_n(x) = \\sum_{j} \\binom{n}{j} B_j
    x^{n-j}`, with :math:`B_1 = -1/2`."""
    numbers = bernoulli_numbers(n)
    return RationalPolynomial([comb(n, j) * numbers[n - j]
                               for j in range(n + 1)])


def antidifference(q):
    """Unique polynomial :math:`F` with :math:`F(x + 1) - F(x) = q(x)` and
    :math:`F(0) = 0`.

    Each monomial :math:`x^m` is summed by Faulhaber's formula
    :math:`(B_{m+1}(x) - B_{m+1}) / (m + 1)`.

    Parameters
    ----------
    q : :class:`RationalPolynomial`, required
        Right-hand side.

    Returns
    -------
    F : :class:`RationalPolynomial`
        Of degree ``q.degree + 1``.

    Examples
    --------
    >>> from fractions import Fraction
    >>> from gpolylog.polyengine import RationalPolynomial, antidifference
    >>> print(antidifference(RationalPolynomial([Fraction(-1, 24), 0, 2])))
    7/24*x - x^2 + 2/3*x^3

    """
    coefficients = [Fraction(0)] * (q.degree + 2)
    for m, c in enumerate(q.coefficients):
        if not c:
            continue
        weight = c / (m + 1)
        for degree, b in enumerate(bernoulli_polynomial(m + 1).coefficients):
            if degree:
                coefficients[degree] += weight * b
    return RationalPolynomial(coefficients)


def _derivatives_at_zero(q):
    """(F'(0), F''(0)) of the antidifference of `q`, from
    F'(x) = sum_m c_m B_m(x)."""
    first = Fraction(0)
    second = Fraction(0)
    for m, c in enumerate(q.coefficients):
        first += c * bernoulli(m)
        if m:
            second += c * m * bernoulli(m - 1)
    return first, second


def p_prime_values(K):
    """Exact derivatives :math:`(P_k'(0), P_k''(0))` for
    :math:`k \\leq K`.

    The constant :math:`P_k(0)` does not affect derivatives, so they are
    those of the antidifference :math:`F_k` of :math:`\\Delta_k`, read off
    without building :math:`F_k`:
    :math:`F_k'(0) = \\sum_m c_m B_m` and
    :math:`F_k''(0) = \\sum_m m c_m B_{m-1}` for
    :math:`\\Delta_k(x) = \\sum_m c_m x^m`.

    Parameters
    ----------
    K : int, required
        Highest index.

    Returns
    -------
    values : list of tuple of :class:`fractions.Fraction`

    Examples
    --------
    >>> from gpolylog.polyengine import p_prime_values
    >>> [tuple(map(str, v)) for v in p_prime_values(1)]
    [('1', '0'), ('7/24', '-2')]

    """
    return [_derivatives_at_zero(delta) for delta in delta_table(K)]


def mean_constant(k):
    """Exact :math:`-\\int_0^1 F_k(x) dx` for the antidifference
    :math:`F_k` of :math:`\\Delta_k`.

    Because the large-k form of :math:`P_k` is a sinusoid of period 1,
    :math:`\\int_0^1 P_k = 0` up to a relative correction exponentially
    small in k, so this is the value of :math:`P_k(0)` closing the
    polynomial when no fitted constant exists. With
    :math:`\\int_0^1 B_n(x) dx = 0` it equals
    :math:`\\sum_m c_m B_{m+1} / (m + 1)`.

    """
    delta = delta_table(k)[k]
    return sum((c * bernoulli(m + 1) / (m + 1)
                for m, c in enumerate(delta.coefficients)), Fraction(0))
