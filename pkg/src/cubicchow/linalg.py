"""Exact dense linear algebra over the rationals.

Matrices are small here (graded pieces of quotient rings, pairing tables),
so plain Gaussian elimination over ``Fraction`` is used; every result is
exact.  Kernel bases and solutions are deterministic: pivots are chosen as
the first nonzero entry in column order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class MatQ:
    """Immutable rational matrix."""

    rows: int
    cols: int
    entries: tuple[Vector, ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Fraction | int]], cols: int | None = None) -> "MatQ":
        data = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if data:
            cols = len(data[0])
            if any(len(row) != cols for row in data):
                raise ValueError("ragged rows")
        elif cols is None:
            raise ValueError("empty matrix needs an explicit column count")
        return cls(len(data), cols, data)

    @classmethod
    def identity(cls, n: int) -> "MatQ":
        return cls.from_rows(
            [[Fraction(int(i == j)) for j in range(n)] for i in range(n)], cols=n
        )

    def transpose(self) -> "MatQ":
        return MatQ.from_rows(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def mat_vec(self, v: Sequence[Fraction | int]) -> Vector:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(
            sum((row[j] * Fraction(v[j]) for j in range(self.cols)), Fraction(0))
            for row in self.entries
        )

    def rank(self) -> int:
        _, pivots = rref(self.entries)
        return len(pivots)


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    m = [list(row) for row in rows]
    if not m:
        return [], []
    n_rows, n_cols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m[:r], pivots


def kernel_basis(matrix: MatQ) -> list[Vector]:
    """Deterministic basis of the right kernel; empty when injective."""
    reduced, pivots = rref(matrix.entries)
    pivot_set = set(pivots)
    free = [c for c in range(matrix.cols) if c not in pivot_set]
    basis: list[Vector] = []
    for f in free:
        v = [Fraction(0)] * matrix.cols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def solve_linear(matrix: MatQ, b: Sequence[Fraction | int]) -> Vector | None:
    """Some exact solution of M*x = b, or ``None`` when inconsistent."""
    if len(b) != matrix.rows:
        raise ValueError("dimension mismatch")
    augmented = [list(row) + [Fraction(bi)] for row, bi in zip(matrix.entries, b)]
    if not augmented:
        return tuple(Fraction(0) for _ in range(matrix.cols))
    reduced, pivots = rref(augmented)
    if matrix.cols in pivots:
        return None
    x = [Fraction(0)] * matrix.cols
    for row, p in zip(reduced, pivots):
        x[p] = row[-1]
    return tuple(x)
