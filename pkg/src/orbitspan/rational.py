"""Exact linear algebra over the rationals: RREF, kernels, canonical subspaces."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterable, Sequence

Vec = tuple[Q, ...]


def vec(values: Iterable) -> Vec:
    """Coerce an iterable of numbers into an exact rational vector."""
    return tuple(Q(v) for v in values)


def rref(rows: Sequence[Sequence[Q]]) -> list[list[Q]]:
    """Reduced row echelon form; drops zero rows, pivots normalized to 1."""
    m = [[Q(x) for x in row] for row in rows]
    if not m:
        return []
    ncols = len(m[0])
    pivot_row = 0
    for col in range(ncols):
        pivot = next((r for r in range(pivot_row, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[pivot_row], m[pivot] = m[pivot], m[pivot_row]
        inv = m[pivot_row][col]
        m[pivot_row] = [x / inv for x in m[pivot_row]]
        for r in range(len(m)):
            if r != pivot_row and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[pivot_row])]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return [row for row in m[:pivot_row] if any(x != 0 for x in row)]


def matrix_rank(rows: Sequence[Sequence[Q]]) -> int:
    return len(rref(rows))


def nullspace(rows: Sequence[Sequence[Q]], ncols: int) -> list[Vec]:
    """Canonical basis of {x : row . x = 0 for every row}."""
    reduced = rref(rows)
    pivot_cols = []
    for row in reduced:
        pivot_cols.append(next(c for c in range(ncols) if row[c] != 0))
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for f in free_cols:
        v = [Q(0)] * ncols
        v[f] = Q(1)
        for row, p in zip(reduced, pivot_cols):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def solve(rows: Sequence[Sequence[Q]], rhs: Sequence[Q]) -> list[Q] | None:
    """One exact solution of rows . x = rhs, or None if inconsistent."""
    if not rows:
        return None
    ncols = len(rows[0])
    augmented = [list(map(Q, row)) + [Q(b)] for row, b in zip(rows, rhs)]
    reduced = rref(augmented)
    x = [Q(0)] * ncols
    for row in reduced:
        pivot = next(c for c in range(ncols + 1) if row[c] != 0)
        if pivot == ncols:
            return None
        x[pivot] = row[ncols]
    # back-check: free variables were set to 0, verify all equations
    for row, b in zip(rows, rhs):
        if sum(a * xi for a, xi in zip(row, x)) != b:
            return None
    return x


@dataclass(frozen=True)
class RationalSubspace:
    """A subspace of Q^n held as a canonical RREF basis; equality is structural."""

    ambient_dimension: int
    basis: tuple[Vec, ...]

    @classmethod
    def span_of(cls, ambient_dimension: int, vectors: Iterable[Sequence[Q]]) -> "RationalSubspace":
        rows = rref([vec(v) for v in vectors])
        return cls(ambient_dimension, tuple(tuple(r) for r in rows))

    @classmethod
    def from_constraints(cls, ambient_dimension: int, constraints: Iterable[Sequence[Q]]) -> "RationalSubspace":
        """Kernel of the constraint matrix, i.e. {x : c . x = 0 for all c}."""
        rows = [vec(c) for c in constraints]
        return cls.span_of(ambient_dimension, nullspace(rows, ambient_dimension))

    @classmethod
    def full(cls, ambient_dimension: int) -> "RationalSubspace":
        eye = []
        for i in range(ambient_dimension):
            row = [Q(0)] * ambient_dimension
            row[i] = Q(1)
            eye.append(tuple(row))
        return cls(ambient_dimension, tuple(eye))

    @classmethod
    def zero(cls, ambient_dimension: int) -> "RationalSubspace":
        return cls(ambient_dimension, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vector: Sequence[Q]) -> bool:
        v = vec(vector)
        if len(v) != self.ambient_dimension:
            raise ValueError("vector has wrong ambient dimension")
        residual = list(v)
        for row in self.basis:
            pivot = next(c for c in range(self.ambient_dimension) if row[c] != 0)
            if residual[pivot] != 0:
                factor = residual[pivot]
                residual = [a - factor * b for a, b in zip(residual, row)]
        return all(x == 0 for x in residual)

    def contains_subspace(self, other: "RationalSubspace") -> bool:
        return all(self.contains(row) for row in other.basis)

    def constraints(self) -> list[Vec]:
        """Rows c with self = {x : c . x = 0 for all c}."""
        return nullspace(list(self.basis), self.ambient_dimension)

    def intersection(self, other: "RationalSubspace") -> "RationalSubspace":
        if self.ambient_dimension != other.ambient_dimension:
            raise ValueError("ambient dimensions differ")
        return RationalSubspace.from_constraints(
            self.ambient_dimension, self.constraints() + other.constraints()
        )

    def plus_vector_dim(self, vector: Sequence[Q]) -> int:
        """Dimension of span(self, vector) without building the new subspace."""
        return self.dim + (0 if self.contains(vector) else 1)
