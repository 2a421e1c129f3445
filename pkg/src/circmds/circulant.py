"""Circulant matrices L and R, submatrix indices and their index maps.

Row/column indices are 0-based.  The two orientations are

    L: entry(i, j) = a[(i + j) mod n]     (rows shift left)
    R: entry(i, j) = a[(j - i) mod n]     (rows shift right)

A circulant is never stored densely; submatrices are addressed by a
:class:`SubmatrixIndex` and only materialized by :func:`extract`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .gf2m import FieldElement, FieldError, FieldSpec


class Variant(str, enum.Enum):
    L = "L"
    R = "R"


class UnsupportedOperation(RuntimeError):
    pass


@dataclass(frozen=True)
class SubmatrixIndex:
    """Ascending row tuple and ascending column tuple."""

    rows: tuple
    cols: tuple

    def __post_init__(self):
        rows, cols = tuple(self.rows), tuple(self.cols)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        for name, t in (("rows", rows), ("cols", cols)):
            if not t:
                raise ValueError(f"{name} must be nonempty")
            if t[0] < 0 or any(a >= b for a, b in zip(t, t[1:])):
                raise ValueError(f"{name} must be strictly ascending and >= 0: {t}")

    @property
    def shape(self):
        return len(self.rows), len(self.cols)

    @property
    def is_square(self) -> bool:
        return len(self.rows) == len(self.cols)

    def check_bounds(self, n: int):
        if self.rows[-1] >= n or self.cols[-1] >= n:
            raise ValueError(f"{self} out of bounds for order {n}")

    def to_json(self) -> dict:
        return {"rows": list(self.rows), "cols": list(self.cols)}

    @classmethod
    def from_json(cls, obj: dict) -> SubmatrixIndex:
        return cls(tuple(obj["rows"]), tuple(obj["cols"]))

    def __str__(self):
        return f"[{','.join(map(str, self.rows))}; {','.join(map(str, self.cols))}]"


@dataclass(frozen=True)
class CirculantSpec:
    """A circulant of order n in orientation L or R.

    ``entries`` holds a_0 .. a_{n-1}; leave it empty for symbolic mode, where
    only index structure (shifts, orbits, transposes) is available.
    """

    order: int
    variant: Variant = Variant.L
    entries: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))
        object.__setattr__(self, "entries", tuple(self.entries))
        if self.order < 2:
            raise ValueError(f"order must be >= 2, got {self.order}")
        if self.entries:
            if len(self.entries) != self.order:
                raise ValueError(
                    f"expected {self.order} entries, got {len(self.entries)}")
            f = self.entries[0].field
            if any(e.field != f for e in self.entries):
                raise FieldError("entries belong to different fields")

    @classmethod
    def from_values(cls, field: FieldSpec, values: Sequence[int],
                    variant=Variant.L) -> CirculantSpec:
        return cls(len(values), variant, tuple(field.element(v) for v in values))

    @property
    def symbolic(self) -> bool:
        return not self.entries

    @property
    def field(self) -> Optional[FieldSpec]:
        return self.entries[0].field if self.entries else None

    def entry_index(self, i: int, j: int) -> int:
        """Which a_t sits at (i, j)."""
        if self.variant is Variant.L:
            return (i + j) % self.order
        return (j - i) % self.order

    def entry(self, i: int, j: int) -> FieldElement:
        if self.symbolic:
            raise UnsupportedOperation("symbolic circulant has no entries")
        return self.entries[self.entry_index(i, j)]


@dataclass(frozen=True)
class DenseMatrix:
    """Row-major matrix of raw field values."""

    field: FieldSpec
    nrows: int
    ncols: int
    data: tuple

    def __post_init__(self):
        if len(self.data) != self.nrows * self.ncols:
            raise ValueError("data length does not match shape")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows) -> DenseMatrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        data = tuple(int(x) for r in rows for x in r)
        return cls(field, len(rows), ncols, data)

    def __getitem__(self, rc) -> FieldElement:
        r, c = rc
        return FieldElement(self.data[r * self.ncols + c], self.field)

    def rows(self) -> list[list[int]]:
        w = self.ncols
        return [list(self.data[r * w:(r + 1) * w]) for r in range(self.nrows)]

    def transpose(self) -> DenseMatrix:
        rows = self.rows()
        return DenseMatrix.from_rows(self.field, zip(*rows))

    def anti_transpose(self) -> DenseMatrix:
        """Reflection along the anti-diagonal: out[i][j] = in[u-1-j][v-1-i]."""
        u, v = self.nrows, self.ncols
        rows = self.rows()
        return DenseMatrix.from_rows(
            self.field,
            [[rows[u - 1 - j][v - 1 - i] for j in range(u)] for i in range(v)])


def extract(spec: CirculantSpec, idx: SubmatrixIndex) -> DenseMatrix:
    if spec.symbolic:
        raise UnsupportedOperation("cannot extract values from a symbolic circulant")
    idx.check_bounds(spec.order)
    vals = [e.value for e in spec.entries]
    n = spec.order
    if spec.variant is Variant.L:
        data = tuple(vals[(i + j) % n] for i in idx.rows for j in idx.cols)
    else:
        data = tuple(vals[(j - i) % n] for i in idx.rows for j in idx.cols)
    return DenseMatrix(spec.field, len(idx.rows), len(idx.cols), data)


def det_values(field: FieldSpec, rows: list[list[int]]) -> int:
    """Determinant of a square matrix of raw values; ``rows`` is consumed."""
    n = len(rows)
    mul, inv = field.mul, field.inv
    det = 1
    for c in range(n):
        p = c
        while p < n and rows[p][c] == 0:
            p += 1
        if p == n:
            return 0
        if p != c:
            # row swaps only flip the sign, which is invisible in char 2
            rows[c], rows[p] = rows[p], rows[c]
        pivot_row = rows[c]
        pivot = pivot_row[c]
        det = mul(det, pivot)
        pinv = inv(pivot)
        for r in range(c + 1, n):
            row = rows[r]
            f = row[c]
            if f:
                f = mul(f, pinv)
                for k in range(c + 1, n):
                    pk = pivot_row[k]
                    if pk:
                        row[k] ^= mul(f, pk)
    return det


def determinant(mat: DenseMatrix) -> FieldElement:
    if mat.nrows != mat.ncols:
        raise FieldError(f"determinant of non-square {mat.nrows}x{mat.ncols} matrix")
    return FieldElement(det_values(mat.field, mat.rows()), mat.field)


def _sorted_mod(t, k, n):
    return tuple(sorted((x + k) % n for x in t))


def shift_submatrix(idx: SubmatrixIndex, k: int, n: int,
                    variant=Variant.L) -> SubmatrixIndex:
    """Index of the k-th derived submatrix.

    Rows move down by k in both orientations; columns move left by k in L and
    right by k in R.  Re-sorting stands in for the reordering permutations.
    """
    variant = Variant(variant)
    col_step = -k if variant is Variant.L else k
    return SubmatrixIndex(_sorted_mod(idx.rows, k, n), _sorted_mod(idx.cols, col_step, n))


def transpose_index(idx: SubmatrixIndex) -> SubmatrixIndex:
    """For L: the transpose of L[rows; cols] is L[cols; rows]."""
    return SubmatrixIndex(idx.cols, idx.rows)


def anti_transpose_index(idx: SubmatrixIndex, n: int) -> SubmatrixIndex:
    """For R: the anti-transpose of R[rows; cols] is again a submatrix of R."""
    return SubmatrixIndex(tuple(n - 1 - j for j in reversed(idx.cols)),
                          tuple(n - 1 - i for i in reversed(idx.rows)))


def reflect_index(idx: SubmatrixIndex, n: int, variant=Variant.L) -> SubmatrixIndex:
    """Transpose for L, anti-transpose for R."""
    if Variant(variant) is Variant.L:
        return transpose_index(idx)
    return anti_transpose_index(idx, n)


def orbit(idx: SubmatrixIndex, n: int, variant=Variant.L) -> set[SubmatrixIndex]:
    return {shift_submatrix(idx, k, n, variant) for k in range(n)}
