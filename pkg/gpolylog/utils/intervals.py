"""Real intervals used as parameter ranges."""
# License: GNU AGPLv3

from numbers import Real


class Interval:
    """Immutable real interval, used as the ``'in'`` entry of parameter
    references passed to :func:`gpolylog.utils.validate_params`.

    Endpoints may be any :class:`numbers.Real`, which includes ints,
    :class:`fractions.Fraction` and :class:`mpmath.mpf`, as well as
    ``float('inf')`` for unbounded sides.

    Parameters
    ----------
    left : real scalar, required
        Left bound for the interval.

    right : real scalar, required
        Right bound for the interval.

    closed : ``'right'`` | ``'left'`` | ``'both'`` | ``'neither'``, required
        Whether the interval is closed on the left-side, right-side, both or
        neither.

    Examples
    --------
    >>> from gpolylog.utils import Interval
    >>> 3 in Interval(0, float('inf'), closed='left')
    True
    >>> str(Interval(0, 1, closed='left'))
    '[0, 1)'

    """
    _VALID_CLOSED = frozenset(['left', 'right', 'both', 'neither'])

    def __init__(self, left, right, *, closed):
        for endpoint in (left, right):
            if not isinstance(endpoint, Real):
                raise ValueError(
                    f"Only real (finite or infinite) endpoints are allowed "
                    f"when constructing an Interval, got {endpoint!r}.")
        if closed not in self._VALID_CLOSED:
            raise ValueError(
                f"Invalid option for `closed`: {closed}. Argument must be "
                f"one of {sorted(self._VALID_CLOSED)}.")
        if not left <= right:
            raise ValueError("Left side of interval must be <= right side")

        self.left = left
        self.right = right
        self.closed = closed

    @property
    def closed_left(self):
        return self.closed in ('left', 'both')

    @property
    def closed_right(self):
        return self.closed in ('right', 'both')

    def __contains__(self, key):
        if isinstance(key, Interval):
            raise TypeError("__contains__ not defined for two intervals")
        if not isinstance(key, Real):
            return False
        above = self.left <= key if self.closed_left else self.left < key
        below = key <= self.right if self.closed_right else key < self.right
        return bool(above and below)

    def __eq__(self, other):
        if not isinstance(other, Interval):
            return NotImplemented
        return (self.left, self.right, self.closed) == \
            (other.left, other.right, other.closed)

    def __hash__(self):
        return hash((self.left, self.right, self.closed))

    def __repr__(self):
        return f"{type(self).__name__}({self.left!r}, {self.right!r}, " \
               f"closed={self.closed!r})"

    def __str__(self):
        start_symbol = '[' if self.closed_left else '('
        end_symbol = ']' if self.closed_right else ')'
        return f'{start_symbol}{self.left}, {self.right}{end_symbol}'
