"""Exact Bernoulli numbers with a process-wide monotone cache."""
# License: GNU AGPLv3

import threading
from fractions import Fraction
from math import comb
from numbers import Integral

_EVEN_BERNOULLI = [Fraction(1)]  # B_0, B_2, B_4, ...
_LOCK = threading.Lock()


def _extend_even(m):
    """Make B_0, B_2, ..., B_{2m} available in the cache."""
    with _LOCK:
        for i in range(len(_EVEN_BERNOULLI), m + 1):
            n = 2 * i
            # sum_{j <= n} C(n + 1, j) B_j = 0 with B_1 = -1/2 and
            # vanishing odd terms beyond it
            acc = Fraction(-(n + 1), 2)
            for j, b in enumerate(_EVEN_BERNOULLI):
                acc += comb(n + 1, 2 * j) * b
            _EVEN_BERNOULLI.append(-acc / (n + 1))


def bernoulli(n):
    """Exact Bernoulli number :math:`B_n`.

    Even-index values are obtained from the binomial recurrence
    :math:`\\sum_{j=0}^{n} \\binom{n+1}{j} B_j = 0` restricted to even
    indices and cached, so that computing :math:`B_{2m}` makes all smaller
    ones available. The convention :math:`B_1 = -1/2` is used.

    Parameters
    ----------
    n : int, required
        Non-negative index.

    Returns
    -------
    b : :class:`fractions.Fraction`
        The exact value, in lowest terms.

    Examples
    --------
    >>> from gpolylog.mpcore import bernoulli
    >>> bernoulli(12)
    Fraction(-691, 2730)

    """
    if not isinstance(n, Integral) or n < 0:
        raise ValueError(f"Parameter `n` is {n!r}, which is not a "
                         f"non-negative integer.")
    n = int(n)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2:
        return Fraction(0)
    m = n // 2
    if m >= len(_EVEN_BERNOULLI):
        _extend_even(m)
    return _EVEN_BERNOULLI[m]


def bernoulli_numbers(n):
    """List ``[B_0, B_1, ..., B_n]`` of exact Bernoulli numbers."""
    if n >= 2:
        bernoulli(n - n % 2)
    return [bernoulli(j) for j in range(n + 1)]
