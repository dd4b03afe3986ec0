"""Exact integer linear algebra: Smith normal form and lattice span tests.

Everything here is over Z (or Q for rank computations) with Python ints,
so results are exact at any size.  Matrices are desk scale (at most a
dozen rows), so the quadratic pivot search below is deliberate: the
smallest-absolute-value pivot rule with a positional tie-break makes the
reduction fully deterministic, which the certificates rely on.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence


class DimensionMismatch(ValueError):
    """Vectors or matrices with incompatible shapes."""


class IntMatrix:
    """An immutable rows x cols integer matrix."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable[int]], cols: int | None = None):
        grid = tuple(tuple(row) for row in entries)
        for row in grid:
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise TypeError(f"entry {x!r} is not an int")
        if grid:
            width = len(grid[0])
            if any(len(row) != width for row in grid):
                raise DimensionMismatch("ragged rows")
            if cols is not None and cols != width:
                raise DimensionMismatch("cols does not match row width")
        else:
            width = 0 if cols is None else cols
        self.rows = len(grid)
        self.cols = width
        self.entries = grid

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(tuple(tuple(0 for _ in range(cols)) for _ in range(rows)), cols=cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                row.append(sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols)))
            out.append(tuple(row))
        return IntMatrix(tuple(out), cols=other.cols)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)) if self.entries else (), cols=self.rows)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_lists()!r})"


def det(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise DimensionMismatch("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


class SmithNormalForm(NamedTuple):
    diagonal: tuple[int, ...]
    u: IntMatrix
    v: IntMatrix


def smith_normal_form(m: IntMatrix) -> SmithNormalForm:
    """U * m * V = diag(d1, d2, ...) with d1 | d2 | ... and U, V unimodular.

    Diagonal entries are nonnegative.  Pivot choice is the smallest
    nonzero absolute value with ties broken by (row, col) position, so
    identical inputs always produce identical transforms.
    """
    r, c = m.rows, m.cols
    a = [list(row) for row in m.entries]
    u = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    v = [[1 if i == j else 0 for j in range(c)] for i in range(c)]

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    def row_sub(i, k, q):
        # row i -= q * row k
        a[i] = [x - q * y for x, y in zip(a[i], a[k])]
        u[i] = [x - q * y for x, y in zip(u[i], u[k])]

    def col_sub(j, k, q):
        # col j -= q * col k
        for row in a:
            row[j] -= q * row[k]
        for row in v:
            row[j] -= q * row[k]

    t = 0
    while t < min(r, c):
        # deterministic global pivot: smallest |entry|, then position
        pivot = None
        best = None
        for i in range(t, r):
            for j in range(t, c):
                x = abs(a[i][j])
                if x and (best is None or x < best):
                    best, pivot = x, (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        if a[t][t] < 0:
            negate_row(t)

        while True:
            for i in range(r):
                if i != t and a[i][t]:
                    row_sub(i, t, a[i][t] // a[t][t])
            left = [(abs(a[i][t]), i) for i in range(r) if i != t and a[i][t]]
            if left:
                swap_rows(t, min(left)[1])
                continue
            for j in range(c):
                if j != t and a[t][j]:
                    col_sub(j, t, a[t][j] // a[t][t])
            left = [(abs(a[t][j]), j) for j in range(c) if j != t and a[t][j]]
            if left:
                swap_cols(t, min(left)[1])
                continue
            break

        # enforce d_t | every remaining entry: fold a violating row in and redo
        d = a[t][t]
        violator = None
        for i in range(t + 1, r):
            if any(x % d for x in a[i][t + 1:]):
                violator = i
                break
        if violator is not None:
            row_sub(t, violator, -1)
            continue
        t += 1

    diagonal = tuple(a[i][i] for i in range(min(r, c)))
    return SmithNormalForm(diagonal, IntMatrix(u, cols=r), IntMatrix(v, cols=c))


def _frac_rank(rows: list[list[Fraction]]) -> int:
    rank = 0
    cols = len(rows[0]) if rows else 0
    for j in range(cols):
        pivot_row = None
        for i in range(rank, len(rows)):
            if rows[i][j] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pv = rows[rank][j]
        for i in range(len(rows)):
            if i != rank and rows[i][j] != 0:
                f = rows[i][j] / pv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def in_rational_span(vectors: Sequence[Sequence[int]], target: Sequence[int]) -> bool:
    """True iff target lies in the Q-span of the given integer vectors."""
    vecs = [list(vec) for vec in vectors]
    tgt = list(target)
    for vec in vecs:
        if len(vec) != len(tgt):
            raise DimensionMismatch("vectors and target have different lengths")
    if all(x == 0 for x in tgt):
        return True
    base = [[Fraction(x) for x in vec] for vec in vecs]
    extended = base + [[Fraction(x) for x in tgt]]
    return _frac_rank([row[:] for row in base]) == _frac_rank(extended)


def row_lattice_basis(vectors: Sequence[Sequence[int]]) -> list[list[int]]:
    """Integer echelon basis of the lattice spanned by the given rows.

    Pivot columns strictly increase and pivots are positive, so greedy
    floor-division reduction against the basis yields one canonical
    representative per coset of the lattice.
    """
    rows = [list(vec) for vec in vectors if any(vec)]
    if not rows:
        return []
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise DimensionMismatch("vectors have different lengths")
    r = 0
    for col in range(width):
        while True:
            nz = [i for i in range(r, len(rows)) if rows[i][col]]
            if len(nz) <= 1:
                break
            i0 = min(nz, key=lambda i: (abs(rows[i][col]), i))
            for i in nz:
                if i != i0:
                    q = rows[i][col] // rows[i0][col]
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[i0])]
        nz = [i for i in range(r, len(rows)) if rows[i][col]]
        if nz:
            rows[r], rows[nz[0]] = rows[nz[0]], rows[r]
            if rows[r][col] < 0:
                rows[r] = [-x for x in rows[r]]
            r += 1
    return rows[:r]


def reduce_mod_lattice(basis: Sequence[Sequence[int]], vec: Sequence[int]) -> tuple[int, ...]:
    """Canonical representative of vec modulo the row lattice of basis.

    basis must come from row_lattice_basis (echelon, positive pivots).
    """
    out = list(vec)
    for row in basis:
        pivot_col = next(j for j, x in enumerate(row) if x)
        q = out[pivot_col] // row[pivot_col]
        if q:
            out = [x - q * y for x, y in zip(out, row)]
    return tuple(out)
