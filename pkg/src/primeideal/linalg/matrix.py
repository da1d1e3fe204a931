"""Immutable arbitrary-precision integer matrices.

Algorithms in this subpackage work on plain ``list[list[int]]`` copies for
speed; :class:`IntMatrix` is the value type handed across module boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from primeideal.errors import DimensionError

Rows = list[list[int]]


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise DimensionError("matrix must have at least one row and one column")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> IntMatrix:
        data = [[int(x) for x in r] for r in rows]
        if not data or not data[0]:
            raise DimensionError("matrix must have at least one row and one column")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise DimensionError("ragged rows")
        return cls(len(data), width, tuple(x for r in data for x in r))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls.from_rows(identity_rows(n))

    @classmethod
    def diagonal(cls, diag: Sequence[int]) -> IntMatrix:
        n = len(diag)
        return cls.from_rows([[diag[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def to_rows(self) -> Rows:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_rows(transpose(self.to_rows()))

    @property
    def T(self) -> IntMatrix:
        return self.transpose()

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        return IntMatrix.from_rows(matmul(self.to_rows(), other.to_rows()))

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def max_abs(self) -> int:
        return max(abs(x) for x in self.entries)

    def column(self, j: int) -> list[int]:
        return [self[i, j] for i in range(self.rows)]

    def diagonal_entries(self) -> list[int]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def dump(self) -> str:
        """Row-major decimal text, one row per line."""
        return "\n".join(" ".join(str(x) for x in r) for r in self.to_rows())

    @classmethod
    def parse(cls, text: str) -> IntMatrix:
        return cls.from_rows([int(t) for t in line.split()] for line in text.splitlines() if line.strip())

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_rows()!r})"


def as_rows(a: IntMatrix | Sequence[Sequence[int]]) -> Rows:
    if isinstance(a, IntMatrix):
        return a.to_rows()
    rows = [[int(x) for x in r] for r in a]
    if not rows or not rows[0] or any(len(r) != len(rows[0]) for r in rows):
        raise DimensionError("expected a non-empty rectangular matrix")
    return rows


def identity_rows(n: int) -> Rows:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(a: Rows) -> Rows:
    return [list(col) for col in zip(*a)]


def matmul(a: Rows, b: Rows) -> Rows:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matmul_mod(a: Rows, b: Rows, m: int) -> Rows:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) % m for col in bt] for row in a]


def matvec(a: Rows, v: Sequence[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]
