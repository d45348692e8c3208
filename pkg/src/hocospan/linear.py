"""Exact rational matrices.

Basis of a tensor power ``A^{⊗n}``: multi-index ``(i_0, ..., i_{n-1})`` sits at
position ``sum(i_k * d**(n-1-k))``, leftmost factor most significant.
Columns index the input, rows the output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

Rational = Fraction


class SingularMatrixError(ArithmeticError):
    pass


@dataclass(frozen=True)
class LinearMap:
    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        if len(entries) != self.rows or any(len(r) != self.cols for r in entries):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} matrix")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> LinearMap:
        rows = [list(r) for r in rows]
        return cls(len(rows), len(rows[0]) if rows else 0, rows)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> LinearMap:
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> LinearMap:
        return cls(n, n, [[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self.entries[ij[0]][ij[1]]

    def __matmul__(self, other: LinearMap) -> LinearMap:
        """``self @ other`` is "other, then self"."""
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = []
        for row in self.entries:
            acc = [Fraction(0)] * other.cols
            for a, orow in zip(row, other.entries):
                if a:
                    for j, b in enumerate(orow):
                        if b:
                            acc[j] += a * b
            out.append(acc)
        return LinearMap(self.rows, other.cols, out)

    def tensor(self, other: LinearMap) -> LinearMap:
        """Kronecker product, ``self`` as the most significant factor."""
        rows = []
        for r1 in self.entries:
            for r2 in other.entries:
                rows.append([a * b if a and b else Fraction(0) for a in r1 for b in r2])
        return LinearMap(self.rows * other.rows, self.cols * other.cols, rows)

    def scale(self, c) -> LinearMap:
        c = Fraction(c)
        return LinearMap(self.rows, self.cols, [[c * x for x in row] for row in self.entries])

    def power(self, k: int) -> LinearMap:
        result = LinearMap.identity(self.rows)
        for _ in range(k):
            result = self @ result
        return result

    def to_text(self) -> str:
        return "".join(" ".join(str(x) for x in row) + "\n" for row in self.entries)


def flat_index(multi: Sequence[int], d: int) -> int:
    i = 0
    for k in multi:
        i = i * d + k
    return i


def multi_indices(n: int, d: int):
    """All multi-indices of ``A^{⊗n}`` in basis order."""
    return product(range(d), repeat=n)


def inverse(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse of a square rational matrix."""
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
