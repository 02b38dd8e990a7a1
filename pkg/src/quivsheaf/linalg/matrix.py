"""Exact rational matrices and the linear-algebra decisions built on them.

All arithmetic is over ``fractions.Fraction``, so rank, solvability and
isomorphism questions are decided exactly.  Matrices with zero rows or
zero columns are legal and represent maps to or from the zero space.
Values are immutable after construction and every operation is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .backend import kernels

Scalar = Fraction


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def as_vector(values: Sequence) -> tuple:
    return tuple(frac(x) for x in values)


@dataclass(frozen=True)
class Matrix:
    """A rows x cols rational matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "Matrix":
        grid = [list(r) for r in rows]
        if grid:
            width = len(grid[0]) if cols is None else cols
            if any(len(r) != width for r in grid):
                raise ValueError("ragged rows")
        else:
            width = 0 if cols is None else cols
        entries = tuple(frac(x) for r in grid for x in r)
        return cls(len(grid), width, entries)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        one, zero = Fraction(1), Fraction(0)
        entries = tuple(one if i == j else zero for i in range(n) for j in range(n))
        return cls(n, n, entries)

    @classmethod
    def column(cls, values: Sequence) -> "Matrix":
        vec = as_vector(values)
        return cls(len(vec), 1, vec)

    @classmethod
    def stack_rows(cls, blocks: Sequence["Matrix"], cols: int) -> "Matrix":
        entries = []
        total = 0
        for b in blocks:
            if b.cols != cols:
                raise ValueError("column mismatch in row stack")
            entries.extend(b.entries)
            total += b.rows
        return cls(total, cols, tuple(entries))

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        entries = tuple(
            self.entries[i * self.cols + j]
            for j in range(self.cols)
            for i in range(self.rows)
        )
        return Matrix(self.cols, self.rows, entries)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch in column stack")
        rows = [list(self.row(i)) + list(other.row(i)) for i in range(self.rows)]
        return Matrix.from_rows(rows, self.cols + other.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        if self.rows == 0 or other.cols == 0:
            return Matrix.zero(self.rows, other.cols)
        if self.cols == 0:
            return Matrix.zero(self.rows, other.cols)
        grid = kernels.matmul(self.to_rows(), other.to_rows(), other.cols)
        return Matrix.from_rows(grid, other.cols)

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def scale(self, c) -> "Matrix":
        c = frac(c)
        return Matrix(self.rows, self.cols, tuple(c * x for x in self.entries))

    def apply(self, vec: Sequence) -> tuple:
        """Matrix-vector product (column-vector convention)."""
        v = as_vector(vec)
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(
            sum((self.entry(i, j) * v[j] for j in range(self.cols)), Fraction(0))
            for i in range(self.rows)
        )

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)


def rref(m: Matrix) -> tuple:
    """Reduced row echelon form of ``m`` with its pivot columns."""
    grid, pivots = kernels.rref_pivots(m.to_rows(), m.cols)
    return Matrix.from_rows(grid, m.cols), tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix) -> list:
    """Basis of the null space of ``m`` as a list of tuples; [] when injective."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    basis = []
    for f in free:
        vec = [Fraction(0)] * m.cols
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -reduced.entry(r, f)
        basis.append(tuple(vec))
    return basis


def solve(m: Matrix, b: Sequence) -> Optional[tuple]:
    """Some particular solution of m x = b, or None when inconsistent."""
    vec = as_vector(b)
    if len(vec) != m.rows:
        raise ValueError("right-hand side length does not match row count")
    augmented = m.hstack(Matrix.column(vec))
    reduced, pivots = rref(augmented)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [Fraction(0)] * m.cols
    for r, p in enumerate(pivots):
        x[p] = reduced.entry(r, m.cols)
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    """Inverse of a square full-rank matrix; raises ValueError otherwise."""
    if m.rows != m.cols:
        raise ValueError("only square matrices can be inverted")
    augmented = m.hstack(Matrix.identity(m.rows))
    reduced, pivots = rref(augmented)
    if len(pivots) != m.rows or any(p >= m.rows for p in pivots):
        raise ValueError("matrix is singular")
    rows = [list(reduced.row(i))[m.rows :] for i in range(m.rows)]
    return Matrix.from_rows(rows, m.rows)


@dataclass(frozen=True)
class LinearMap:
    """A linear map under the column-vector convention: the matrix acts on
    the left, so domain is the column count and codomain the row count."""

    matrix: Matrix

    @property
    def domain_dim(self) -> int:
        return self.matrix.cols

    @property
    def codomain_dim(self) -> int:
        return self.matrix.rows

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "LinearMap":
        return cls(Matrix.from_rows(rows, cols))

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls(Matrix.identity(n))

    @classmethod
    def zero(cls, codomain_dim: int, domain_dim: int) -> "LinearMap":
        return cls(Matrix.zero(codomain_dim, domain_dim))

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        """Composition self after other."""
        return LinearMap(self.matrix @ other.matrix)

    def apply(self, vec: Sequence) -> tuple:
        return self.matrix.apply(vec)


def is_isomorphism(f: LinearMap) -> bool:
    """True iff f is square and of full rank; 0x0 maps count as isomorphisms."""
    return f.domain_dim == f.codomain_dim and rank(f.matrix) == f.domain_dim


def transpose_map(f: LinearMap) -> LinearMap:
    return LinearMap(f.matrix.transpose())


def inverse_map(f: LinearMap) -> LinearMap:
    return LinearMap(inverse(f.matrix))
