"""Polynomials with exact rational coefficients."""
# License: GNU AGPLv3

from fractions import Fraction
from numbers import Rational

from mpmath import mpf

from ..mpcore import to_mpf


def _trim(coefficients):
    while coefficients and not coefficients[-1]:
        coefficients.pop()
    return coefficients


class RationalPolynomial:
    """Immutable univariate polynomial with :class:`fractions.Fraction`
    coefficients in ascending degree.

    The coefficient tuple never ends in a zero, so that the zero polynomial
    has no coefficients and degree ``-1``.

    Parameters
    ----------
    coefficients : iterable of rational scalars, optional, default: ``()``
        Coefficients of :math:`1, x, x^2, \\ldots`.

    Examples
    --------
    >>> from fractions import Fraction
    >>> from gpolylog.polyengine import RationalPolynomial
    >>> p = RationalPolynomial([Fraction(-2, 3), 1])
    >>> p(Fraction(1, 2))
    Fraction(-1, 6)
    >>> p.to_text()
    '-2/3 1/1'

    """
    __slots__ = ('_coefficients',)

    def __init__(self, coefficients=()):
        coefficients = [Fraction(c) for c in coefficients]
        self._coefficients = tuple(_trim(coefficients))

    @classmethod
    def monomial(cls, degree, coefficient=1):
        return cls([0] * degree + [coefficient])

    @property
    def coefficients(self):
        return self._coefficients

    @property
    def degree(self):
        return len(self._coefficients) - 1

    @property
    def leading_coefficient(self):
        return self._coefficients[-1] if self._coefficients else Fraction(0)

    def coefficient(self, degree):
        if 0 <= degree < len(self._coefficients):
            return self._coefficients[degree]
        return Fraction(0)

    def denominators(self):
        return [c.denominator for c in self._coefficients]

    def __bool__(self):
        return bool(self._coefficients)

    def __eq__(self, other):
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self):
        return hash(self._coefficients)

    def __repr__(self):
        return f"RationalPolynomial({[str(c) for c in self._coefficients]})"

    def __str__(self):
        if not self._coefficients:
            return "0"
        terms = []
        for degree, c in enumerate(self._coefficients):
            if not c:
                continue
            monomial = {0: "", 1: "x"}.get(degree, f"x^{degree}")
            if monomial and abs(c) == 1:
                body = monomial
            else:
                body = f"{abs(c)}{'*' if monomial else ''}{monomial}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def _coerce(self, other):
        if isinstance(other, RationalPolynomial):
            return other
        if isinstance(other, Rational):
            return RationalPolynomial([other])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coefficients, other._coefficients
        if len(a) < len(b):
            a, b = b, a
        result = list(a)
        for i, c in enumerate(b):
            result[i] += c
        return RationalPolynomial(result)

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial([-c for c in self._coefficients])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            return RationalPolynomial([c * other for c in self._coefficients])
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        a, b = self._coefficients, other._coefficients
        if not a or not b:
            return RationalPolynomial()
        result = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, c in enumerate(a):
            if c:
                for j, d in enumerate(b):
                    result[i + j] += c * d
        return RationalPolynomial(result)

    __rmul__ = __mul__

    def __call__(self, x):
        """Horner evaluation, exact for rational `x` and at the current
        mpmath precision otherwise."""
        if isinstance(x, Rational):
            value = Fraction(0)
            for c in reversed(self._coefficients):
                value = value * x + c
            return value
        value = mpf(0) * x
        for c in reversed(self._coefficients):
            value = value * x + to_mpf(c)
        return value

    def derivative(self, order=1):
        coefficients = list(self._coefficients)
        for _ in range(order):
            coefficients = [i * c for i, c in enumerate(coefficients)][1:]
        return RationalPolynomial(coefficients)

    def compose_linear(self, a, b):
        """The polynomial :math:`x \\mapsto p(a x + b)`."""
        linear = RationalPolynomial([b, a])
        result = RationalPolynomial()
        for c in reversed(self._coefficients):
            result = result * linear + c
        return result

    def shift(self, h=1):
        """The polynomial :math:`x \\mapsto p(x + h)`."""
        return self.compose_linear(1, h)

    def integral(self, lower=0, upper=1):
        """Exact definite integral over ``[lower, upper]``."""
        lower, upper = Fraction(lower), Fraction(upper)
        return sum((c * (upper ** (i + 1) - lower ** (i + 1)) / (i + 1)
                    for i, c in enumerate(self._coefficients)), Fraction(0))

    def to_text(self):
        """Serialise as space-separated ``num/den`` coefficients in
        ascending degree, ``0/1`` for the zero polynomial."""
        coefficients = self._coefficients or (Fraction(0),)
        return " ".join(f"{c.numerator}/{c.denominator}"
                        for c in coefficients)

    @classmethod
    def from_text(cls, line):
        """Inverse of :meth:`to_text`."""
        fields = line.split()
        if not fields:
            raise ValueError("Empty polynomial line.")
        coefficients = []
        for field in fields:
            numerator, sep, denominator = field.partition("/")
            if not sep:
                raise ValueError(f"Coefficient {field!r} is not of the form "
                                 f"num/den.")
            coefficients.append(Fraction(int(numerator), int(denominator)))
        return cls(coefficients)
