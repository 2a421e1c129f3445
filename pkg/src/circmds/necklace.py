"""Compositions of n, their rotation classes, and row tuples built from them.

Everything here is a generator over ``itertools.combinations`` so large
orders stream without recursion.  The fixed linear order on compositions is
lexicographic on the parts tuple.
"""

from itertools import combinations, accumulate
from typing import Iterator


def compositions(n: int, u: int) -> Iterator[tuple]:
    """All compositions of ``n`` into ``u`` positive parts, lexicographically.

    A composition is determined by its u-1 interior cut points in 1..n-1, and
    lexicographic order on parts coincides with lexicographic order on cuts.

    >>> list(compositions(3, 2))
    [(1, 2), (2, 1)]
    """
    if u < 1 or u > n:
        return
    for cuts in combinations(range(1, n), u - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def rotations(c: tuple) -> list[tuple]:
    return [c[r:] + c[:r] for r in range(len(c))]


def canonical_rotation(c: tuple) -> tuple:
    """Lexicographically smallest left rotation of ``c``."""
    c = tuple(c)
    return min(rotations(c)) if c else c


def necklaces(n: int, u: int) -> Iterator[tuple]:
    """One composition per rotation class, the canonical one, in lex order.

    The canonical member of a class is also the first member reached in lex
    order, so filtering for fixed points of :func:`canonical_rotation` keeps
    the order without a seen-set.
    """
    for c in compositions(n, u):
        if c == canonical_rotation(c):
            yield c


def rows_from_composition(c: tuple) -> tuple:
    """Prefix sums (0, d1, d1+d2, ..., d1+...+d_{u-1})."""
    return (0,) + tuple(accumulate(c[:-1]))


def difference_tuple(rows: tuple, n: int) -> tuple:
    """Consecutive gaps of ``rows`` followed by the wrap-around gap."""
    gaps = tuple(b - a for a, b in zip(rows, rows[1:]))
    return gaps + (n - (rows[-1] - rows[0]),)


def subsets(n: int, u: int) -> Iterator[tuple]:
    return combinations(range(n), u)
