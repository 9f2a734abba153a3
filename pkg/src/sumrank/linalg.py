"""Exact dense linear algebra over any tower level.

Everything is Gaussian elimination with first-nonzero pivoting (fields have
no magnitudes, so any nonzero pivot is as good as another and this choice
keeps results deterministic).  Matrices are immutable; all functions are
pure.  Empty matrices follow the conventions det([]) = 1 and rank([]) = 0
so that degenerate block sizes fall out of the general formulas.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AmbientMismatchError,
    NotSquareError,
    SingularLeadingBlockError,
)
from .fields import Elem, FieldTower


class Mat:
    """Immutable row-major matrix of :class:`Elem` values at one level."""

    __slots__ = ("tower", "level", "rows", "cols", "entries")

    def __init__(self, tower: FieldTower, level: str, rows: int, cols: int, entries):
        self.tower = tower
        self.level = level
        self.rows = rows
        self.cols = cols
        self.entries = tuple(tuple(row) for row in entries)
        if len(self.entries) != rows or any(len(r) != cols for r in self.entries):
            raise ValueError("entry grid does not match declared shape")

    @classmethod
    def from_rows(cls, rows, tower=None, level=None, cols=None) -> "Mat":
        rows = [list(r) for r in rows]
        if rows and rows[0]:
            probe = rows[0][0]
            tower, level = probe.tower, probe.level
            cols = len(rows[0])
        if tower is None or level is None or cols is None:
            raise ValueError("empty matrix needs explicit tower/level/cols")
        return cls(tower, level, len(rows), cols, rows)

    @classmethod
    def identity(cls, tower: FieldTower, level: str, n: int) -> "Mat":
        zero, one = tower.zero(level), tower.one(level)
        return cls(
            tower,
            level,
            n,
            n,
            [[one if i == j else zero for j in range(n)] for i in range(n)],
        )

    @classmethod
    def zeros(cls, tower: FieldTower, level: str, rows: int, cols: int) -> "Mat":
        zero = tower.zero(level)
        return cls(tower, level, rows, cols, [[zero] * cols for _ in range(rows)])

    def __getitem__(self, ij) -> Elem:
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def transpose(self) -> "Mat":
        return Mat(
            self.tower,
            self.level,
            self.cols,
            self.rows,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        zero = self.tower.zero(self.level)
        out = []
        bt = other.transpose().entries
        for arow in self.entries:
            row = []
            for bcol in bt:
                acc = zero
                for x, y in zip(arow, bcol):
                    if x and y:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return Mat(self.tower, self.level, self.rows, other.cols, out)

    def stack(self, other: "Mat") -> "Mat":
        if self.cols != other.cols:
            raise ValueError("column mismatch in stack")
        return Mat(
            self.tower,
            self.level,
            self.rows + other.rows,
            self.cols,
            list(self.entries) + list(other.entries),
        )

    def is_zero(self) -> bool:
        return all(not e for row in self.entries for e in row)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows)
            for j in range(i)
        )

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and other.rows == self.rows
            and other.cols == self.cols
            and other.entries == self.entries
        )

    def __hash__(self):
        return hash(self.entries)

    def to_lists(self) -> list[list[str]]:
        return [[str(e) for e in row] for row in self.entries]

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols}, {self.to_lists()})"


@dataclass(frozen=True)
class Subspace:
    """A subspace of the row space F^ambient_dim, held as an RREF basis."""

    ambient_dim: int
    basis: Mat

    @property
    def dim(self) -> int:
        return self.basis.rows

    @classmethod
    def from_generators(cls, rows, tower, level, ambient_dim) -> "Subspace":
        mat = Mat.from_rows(rows, tower=tower, level=level, cols=ambient_dim)
        reduced, _ = _row_reduce(mat)
        return cls(ambient_dim, Mat.from_rows(reduced, tower=tower, level=level, cols=ambient_dim))

    def contains(self, vector) -> bool:
        probe = Subspace.from_generators(
            list(self.basis.entries) + [vector],
            self.basis.tower,
            self.basis.level,
            self.ambient_dim,
        )
        return probe.dim == self.dim


def _row_reduce(m: Mat):
    """Reduced row echelon form; returns (nonzero rows, pivot column list)."""
    rows = [list(r) for r in m.entries]
    nrows, ncols = m.rows, m.cols
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(rank, nrows):
            if rows[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        inv = m.tower.one(m.level) / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(nrows):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return rows[:rank], pivots


def det(m: Mat) -> Elem:
    """Determinant by elimination; multiplicative over block-triangular splits."""
    if m.rows != m.cols:
        raise NotSquareError(f"determinant of a {m.rows}x{m.cols} matrix")
    n = m.rows
    one = m.tower.one(m.level)
    if n == 0:
        return one
    rows = [list(r) for r in m.entries]
    acc = one
    for col in range(n):
        pivot_row = None
        for i in range(col, n):
            if rows[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            return m.tower.zero(m.level)
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            acc = -acc
        pivot = rows[col][col]
        acc = acc * pivot
        inv = one / pivot
        for i in range(col + 1, n):
            if rows[i][col]:
                f = rows[i][col] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[col])]
    return acc


def rank_kernel(m: Mat) -> tuple[int, Subspace]:
    """Rank of m and a basis of its right kernel {v : m v^T = 0}."""
    reduced, pivots = _row_reduce(m)
    rank = len(pivots)
    zero, one = m.tower.zero(m.level), m.tower.one(m.level)
    pivot_set = set(pivots)
    kernel_rows = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [zero] * m.cols
        v[free] = one
        for i, pcol in enumerate(pivots):
            v[pcol] = -reduced[i][free]
        kernel_rows.append(v)
    ker = Subspace.from_generators(kernel_rows, m.tower, m.level, m.cols)
    return rank, ker


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection of two row spaces via the kernel of the stacked system.

    A vector lies in both spaces iff it is x A = -y B for some solution
    (x, y) of x A + y B = 0, i.e. a kernel element of [A^T | B^T].
    """
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatchError(
            f"ambient dims {a.ambient_dim} and {b.ambient_dim} differ"
        )
    tower, level = a.basis.tower, a.basis.level
    n = a.ambient_dim
    if a.dim == 0 or b.dim == 0:
        return Subspace.from_generators([], tower, level, n)
    stacked = a.basis.stack(b.basis).transpose()  # n x (ka + kb)
    _, ker = rank_kernel(stacked)
    vectors = []
    zero = tower.zero(level)
    for krow in ker.basis.entries:
        x = krow[: a.dim]
        v = [zero] * n
        for coef, arow in zip(x, a.basis.entries):
            if coef:
                v = [acc + coef * e for acc, e in zip(v, arow)]
        vectors.append(v)
    return Subspace.from_generators(vectors, tower, level, n)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatchError(
            f"ambient dims {a.ambient_dim} and {b.ambient_dim} differ"
        )
    return Subspace.from_generators(
        list(a.basis.entries) + list(b.basis.entries),
        a.basis.tower,
        a.basis.level,
        a.ambient_dim,
    )


def solve(m: Mat, rhs) -> list[Elem]:
    """Solve m x = rhs for square invertible m; raises if singular."""
    if m.rows != m.cols:
        raise NotSquareError("solve needs a square matrix")
    aug_rows = [list(row) + [r] for row, r in zip(m.entries, rhs)]
    aug = Mat.from_rows(aug_rows, tower=m.tower, level=m.level, cols=m.cols + 1)
    reduced, pivots = _row_reduce(aug)
    if pivots != list(range(m.cols)):
        raise SingularLeadingBlockError("singular system")
    return [reduced[i][m.cols] for i in range(m.cols)]


def schur_residual(h: Mat) -> Elem:
    """For h = [[M, b], [c^T, d]] with invertible leading block M, the value
    d - c^T M^{-1} b, which satisfies residual * det(M) = det(h).  A 1x1
    input returns its single entry (empty leading block)."""
    if h.rows != h.cols:
        raise NotSquareError("schur_residual needs a square matrix")
    n = h.rows
    if n == 0:
        raise NotSquareError("schur_residual of an empty matrix")
    if n == 1:
        return h[0, 0]
    lead = Mat.from_rows(
        [row[: n - 1] for row in h.entries[: n - 1]],
        tower=h.tower,
        level=h.level,
        cols=n - 1,
    )
    b = [h.entries[i][n - 1] for i in range(n - 1)]
    try:
        x = solve(lead, b)
    except SingularLeadingBlockError:
        raise SingularLeadingBlockError(
            "leading principal block is singular"
        ) from None
    d = h.entries[n - 1][n - 1]
    acc = d
    for c, xi in zip(h.entries[n - 1][: n - 1], x):
        acc = acc - c * xi
    return acc
