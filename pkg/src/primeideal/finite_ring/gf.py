"""Dense linear algebra over a prime field ``F_p``.

Vectors are lists of ints in ``[0, p)``; matrices are lists of rows.
"""

from __future__ import annotations

from typing import Sequence


def rref(rows: Sequence[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and the pivot column of each nonzero row."""
    a = [[x % p for x in r] for r in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(len(a)):
            f = a[i][c]
            if i != r and f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows: Sequence[Sequence[int]], p: int) -> int:
    return len(rref(rows, p)[1])


def nullspace(rows: Sequence[Sequence[int]], p: int, ncols: int | None = None) -> list[list[int]]:
    """Basis of ``{x : rows @ x = 0}``."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = rref(rows, p) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(red, pivots):
            v[pc] = -row[f] % p
        basis.append(v)
    return basis


def solve(columns: Sequence[Sequence[int]], target: Sequence[int], p: int) -> list[int] | None:
    """Coefficients ``x`` with ``sum_j x_j columns[j] = target``, or None."""
    n = len(target)
    k = len(columns)
    aug = [[columns[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    red, pivots = rref(aug, p)
    if k in pivots:
        return None
    x = [0] * k
    for row, pc in zip(red, pivots):
        x[pc] = row[k]
    return x


class SpanSolver:
    """Express vectors in a fixed set of (independent) spanning vectors."""

    def __init__(self, vectors: Sequence[Sequence[int]], p: int) -> None:
        self.p = p
        self.k = len(vectors)
        self.dim = len(vectors[0]) if vectors else 0
        # rows of (v_j | e_j); reducing keeps track of the combination
        aug = [list(v) + [1 if i == j else 0 for i in range(self.k)] for j, v in enumerate(vectors)]
        self._rows, self._pivots = rref(aug, p)
        if any(pc >= self.dim for pc in self._pivots):
            raise ValueError("vectors are linearly dependent")

    def coords(self, target: Sequence[int]) -> list[int] | None:
        p = self.p
        v = [x % p for x in target] + [0] * self.k
        for row, pc in zip(self._rows, self._pivots):
            f = v[pc]
            if f:
                v = [(x - f * y) % p for x, y in zip(v, row)]
        if any(v[: self.dim]):
            return None
        return [(-x) % p for x in v[self.dim:]]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], p: int) -> list[list[int]]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(r, c)) % p for c in bt] for r in a]


def matpow(a: Sequence[Sequence[int]], e: int, p: int) -> list[list[int]]:
    n = len(a)
    result = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    base = [list(r) for r in a]
    while e:
        if e & 1:
            result = matmul(result, base, p)
        base = matmul(base, base, p)
        e >>= 1
    return result
