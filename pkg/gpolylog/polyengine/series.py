"""Truncated power series in 1/u with polynomial coefficients."""
# License: GNU AGPLv3

from fractions import Fraction
from numbers import Integral, Rational

from .polynomial import RationalPolynomial


class USeries:
    """Power series :math:`\\sum_{k=0}^{K} a_k u^{-k}` truncated at order
    `K`, whose coefficients :math:`a_k` are
    :class:`RationalPolynomial` instances.

    Sums and products of two series are truncated at the smaller order.

    Parameters
    ----------
    coefficients : iterable of RationalPolynomial or rational scalars
        :math:`a_0, a_1, \\ldots`. Missing coefficients up to `order` are
        zero, extra ones are dropped.

    order : int, required
        Truncation order `K`.

    """
    __slots__ = ('coefficients', 'order')

    def __init__(self, coefficients, order):
        if not isinstance(order, Integral) or order < 0:
            raise ValueError(f"Parameter `order` is {order!r}, which is not a "
                             f"non-negative integer.")
        coefficients = [c if isinstance(c, RationalPolynomial)
                        else RationalPolynomial([c])
                        for c in list(coefficients)[:order + 1]]
        coefficients += [RationalPolynomial()] \
            * (order + 1 - len(coefficients))
        self.coefficients = tuple(coefficients)
        self.order = int(order)

    def __getitem__(self, k):
        return self.coefficients[k]

    def __len__(self):
        return self.order + 1

    def __eq__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        return (self.order, self.coefficients) == \
            (other.order, other.coefficients)

    def __hash__(self):
        return hash((self.order, self.coefficients))

    def __repr__(self):
        return f"USeries(order={self.order}, " \
               f"coefficients={list(map(str, self.coefficients))})"

    def truncate(self, order):
        return USeries(self.coefficients, min(order, self.order))

    def __add__(self, other):
        if isinstance(other, (Rational, RationalPolynomial)):
            other = USeries([other], self.order)
        if not isinstance(other, USeries):
            return NotImplemented
        order = min(self.order, other.order)
        return USeries([a + b for a, b in zip(self.coefficients[:order + 1],
                                              other.coefficients)], order)

    __radd__ = __add__

    def __neg__(self):
        return USeries([-a for a in self.coefficients], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (Rational, RationalPolynomial)):
            return USeries([a * other for a in self.coefficients],
                           self.order)
        if not isinstance(other, USeries):
            return NotImplemented
        order = min(self.order, other.order)
        product = []
        for k in range(order + 1):
            term = RationalPolynomial()
            for j in range(k + 1):
                if self.coefficients[j] and other.coefficients[k - j]:
                    term += self.coefficients[j] * other.coefficients[k - j]
            product.append(term)
        return USeries(product, order)

    __rmul__ = __mul__

    def times_u(self):
        """Multiply by `u`, i.e. drop the vanishing constant term and shift
        the remaining coefficients down by one order."""
        if self.coefficients[0]:
            raise ValueError("Only a series without constant term can be "
                             "multiplied by u.")
        return USeries(self.coefficients[1:], max(self.order - 1, 0))

    def exp(self):
        """Formal exponential of a series with zero constant term, from the
        recurrence :math:`k E_k = \\sum_{j=1}^{k} j a_j E_{k-j}`."""
        if self.coefficients[0]:
            raise ValueError("The exponential needs a zero constant term.")
        result = [RationalPolynomial([1])]
        for k in range(1, self.order + 1):
            term = RationalPolynomial()
            for j in range(1, k + 1):
                if self.coefficients[j]:
                    term += self.coefficients[j] * result[k - j] * j
            result.append(term * Fraction(1, k))
        return USeries(result, self.order)

    def log(self):
        """Formal logarithm of a series with constant term 1, from the
        recurrence :math:`k L_k = k a_k - \\sum_{j=1}^{k-1} j L_j a_{k-j}`."""
        if self.coefficients[0] != RationalPolynomial([1]):
            raise ValueError("The logarithm needs a constant term equal "
                             "to 1.")
        result = [RationalPolynomial()]
        for k in range(1, self.order + 1):
            term = self.coefficients[k] * k
            for j in range(1, k):
                if result[j] and self.coefficients[k - j]:
                    term -= result[j] * self.coefficients[k - j] * j
            result.append(term * Fraction(1, k))
        return USeries(result, self.order)

    def compose_linear(self, a, b):
        """Substitute :math:`a x + b` into every coefficient."""
        return USeries([c.compose_linear(a, b) for c in self.coefficients],
                       self.order)
