"""Construction of the reduced set of pairwise non-equivalent submatrices.

For each order u in 2..n-1 the row tuples are the prefix sums of one
composition per rotation class (so every row tuple starts at 0), and the
column tuples are all u-subsets of range(n).  After a row tuple is processed
the orbit of column tuples whose submatrices would only repeat (up to shift)
the transpose of something already emitted is struck from the column pool.
The n singleton classes and the full matrix complete the set.

For R the struck orbit is that of the mirrored row tuple n-1-i rather than
of i itself: anti-transposition maps rows to n-1-cols, so the column tuples
that lead back to an earlier row tuple i are the shifts of n-1-i.  Orbit
sizes are unchanged, so counts agree between L and R.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .circulant import SubmatrixIndex, Variant, reflect_index, shift_submatrix
from .necklace import necklaces, rows_from_composition, subsets


def row_orbit_tuples(rows: tuple, n: int) -> set[tuple]:
    """All cyclic shifts of a row tuple, each re-sorted."""
    return {tuple(sorted((r + k) % n for r in rows)) for k in range(n)}


def mirror_rows(rows: tuple, n: int) -> tuple:
    return tuple(sorted(n - 1 - r for r in rows))


class ExclusionLedger:
    """Column pool for one order u, minus the tuples excluded so far.

    The pool is an insertion-ordered dict, so the surviving columns keep
    lexicographic order and removal is O(1) per tuple.
    """

    def __init__(self, n: int, u: int):
        self.n = n
        self.u = u
        self.excluded: set[tuple] = set()
        self._pool = dict.fromkeys(subsets(n, u))

    def remaining(self) -> list[tuple]:
        return list(self._pool)

    def __len__(self):
        return len(self._pool)

    def exclude_orbit(self, rows: tuple):
        for t in row_orbit_tuples(rows, self.n):
            if t not in self.excluded:
                self.excluded.add(t)
                self._pool.pop(t, None)


def _exclusion_base(rows: tuple, n: int, variant: Variant) -> tuple:
    return rows if variant is Variant.L else mirror_rows(rows, n)


def row_tuples(n: int, u: int) -> Iterator[tuple]:
    for c in necklaces(n, u):
        yield rows_from_composition(c)


def iter_blocks(n: int, variant=Variant.L, orders=None) -> Iterator[tuple]:
    """Yield ``(u, rows, cols_list)`` for every row tuple, u ascending.

    ``cols_list`` holds every column tuple paired with ``rows`` in the
    reduced set.  Singletons and the full matrix are not included.
    """
    variant = Variant(variant)
    for u in orders if orders is not None else range(2, n):
        ledger = ExclusionLedger(n, u)
        for rows in row_tuples(n, u):
            yield u, rows, ledger.remaining()
            ledger.exclude_orbit(_exclusion_base(rows, n, variant))


def singleton_indices(n: int) -> list[SubmatrixIndex]:
    return [SubmatrixIndex((0,), (j,)) for j in range(n)]


def full_index(n: int) -> SubmatrixIndex:
    return SubmatrixIndex(tuple(range(n)), tuple(range(n)))


def iter_representatives(n: int, variant=Variant.L) -> Iterator[SubmatrixIndex]:
    """Every stored representative in canonical order: 1x1, u = 2..n-1, full."""
    yield from singleton_indices(n)
    for _, rows, cols_list in iter_blocks(n, variant):
        for cols in cols_list:
            yield SubmatrixIndex(rows, cols)
    yield full_index(n)


def count_order(n: int, u: int, variant=Variant.L) -> int:
    """Number of representatives of order u without listing them."""
    if u == 1:
        return n
    if u == n:
        return 1
    variant = Variant(variant)
    ledger = ExclusionLedger(n, u)
    total = 0
    for rows in row_tuples(n, u):
        total += len(ledger)
        ledger.exclude_orbit(_exclusion_base(rows, n, variant))
    return total


@dataclass
class ReducedSet:
    n: int
    variant: Variant
    counts: dict
    classes: Optional[dict] = None
    _lookup: Optional[dict] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.variant = Variant(self.variant)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def counts_only(self) -> bool:
        return self.classes is None

    def __iter__(self):
        if self.classes is None:
            raise ValueError("counts-only reduced set has no representatives")
        for u in sorted(self.classes):
            yield from self.classes[u]

    def __len__(self):
        return self.total

    def __contains__(self, idx: SubmatrixIndex) -> bool:
        return idx in self.lookup()

    def lookup(self) -> dict:
        """Map each stored index to its position in canonical order."""
        if self._lookup is None:
            self._lookup = {idx: pos for pos, idx in enumerate(self)}
        return self._lookup

    def header(self) -> dict:
        return {
            "n": self.n,
            "variant": self.variant.value,
            "counts": {str(u): c for u, c in sorted(self.counts.items())},
            "total": self.total,
        }

    def to_json(self, counts_only: bool = False) -> str:
        obj = self.header()
        if not counts_only and self.classes is not None:
            obj["classes"] = {
                str(u): [idx.to_json() for idx in reps]
                for u, reps in sorted(self.classes.items())
            }
        return json.dumps(obj)

    @classmethod
    def from_json(cls, text: str) -> ReducedSet:
        obj = json.loads(text)
        counts = {int(u): c for u, c in obj["counts"].items()}
        classes = None
        if "classes" in obj:
            classes = {int(u): [SubmatrixIndex.from_json(x) for x in reps]
                       for u, reps in obj["classes"].items()}
        rs = cls(obj["n"], Variant(obj["variant"]), counts, classes)
        if rs.total != obj["total"]:
            raise ValueError("total does not match per-order counts")
        return rs

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["u", "rows", "cols"])
        for idx in self:
            w.writerow([len(idx.rows), "-".join(map(str, idx.rows)),
                        "-".join(map(str, idx.cols))])
        return buf.getvalue()


def build_reduced_set(n: int, variant=Variant.L, counts_only: bool = False,
                      visitor: Optional[Callable[[int, SubmatrixIndex], None]] = None
                      ) -> ReducedSet:
    """Build the reduced set for a circulant of order ``n >= 3``.

    With ``counts_only`` nothing is enumerated.  With a ``visitor`` each
    representative is handed to ``visitor(u, idx)`` in canonical order and
    the returned set carries counts only.
    """
    if n < 3:
        raise ValueError(f"reduced set needs n >= 3, got {n}")
    variant = Variant(variant)
    if counts_only:
        counts = {u: count_order(n, u, variant) for u in range(1, n + 1)}
        return ReducedSet(n, variant, counts)

    counts = {u: 0 for u in range(1, n + 1)}
    classes = None if visitor else {u: [] for u in range(1, n + 1)}

    def emit(u, idx):
        counts[u] += 1
        if visitor:
            visitor(u, idx)
        else:
            classes[u].append(idx)

    for idx in singleton_indices(n):
        emit(1, idx)
    for u, rows, cols_list in iter_blocks(n, variant):
        for cols in cols_list:
            emit(u, SubmatrixIndex(rows, cols))
    emit(n, full_index(n))
    return ReducedSet(n, variant, counts, classes)


@dataclass(frozen=True)
class Certificate:
    """``idx`` is the k-th shift of ``representative`` (or of its reflection)."""

    representative: SubmatrixIndex
    k: int
    transposed: bool


def membership_certificate(idx: SubmatrixIndex, rs: ReducedSet) -> Optional[Certificate]:
    """Find the stored representative covering ``idx``; None if uncovered.

    "Transposed" means transposition for L and anti-transposition for R.
    """
    n, variant = rs.n, rs.variant
    idx.check_bounds(n)
    stored = rs.lookup()
    for k in range(n):
        back = shift_submatrix(idx, (n - k) % n, n, variant)
        if back in stored:
            return Certificate(back, k, False)
    for k in range(n):
        back = reflect_index(shift_submatrix(idx, (n - k) % n, n, variant), n, variant)
        if back in stored:
            return Certificate(back, k, True)
    return None

