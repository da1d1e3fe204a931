"""Column-style Hermite normal form.

Convention: for an ``n x m`` integer matrix ``A`` of rank ``n`` there is a
unimodular ``U`` with ``A U = (0 | H)`` where ``H`` is ``n x n`` upper
triangular, ``H[i][i] > 0`` and ``0 <= H[i][j] < H[i][i]`` for ``j > i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Sequence

from primeideal.errors import DimensionError, RankDeficient
from primeideal.linalg.matrix import IntMatrix, Rows, as_rows, transpose


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g = gcd(a, b) >= 0``.

    When one argument divides the other the cofactors are chosen as 0/±1,
    which keeps transforms small.
    """
    if b == 0 or (a != 0 and b % a == 0):
        return (abs(a), (1 if a >= 0 else -1), 0) if a != 0 else (0, 0, 0)
    if a == 0 or a % b == 0:
        return abs(b), 0, (1 if b > 0 else -1)
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class HnfResult:
    H: IntMatrix
    U: IntMatrix

    @property
    def det(self) -> int:
        return prod(self.H.diagonal_entries())


def _combine(cols: Rows, k: int, j: int, s: int, t: int, x: int, y: int) -> None:
    # (col_k, col_j) <- (s col_k + t col_j, x col_j - y col_k); determinant 1.
    ck, cj = cols[k], cols[j]
    cols[k] = [s * a + t * b for a, b in zip(ck, cj)]
    cols[j] = [x * b - y * a for a, b in zip(ck, cj)]


def hnf_with_transform(a: IntMatrix | Sequence[Sequence[int]], h: int | None = None) -> HnfResult:
    """Hermite normal form together with the unimodular column transform.

    Args:
        a: ``n x m`` matrix of rank ``n`` (so ``m >= n``).
        h: optional positive multiple of the lattice determinant. When given,
            the result is checked against it.

    Raises:
        RankDeficient: if ``a`` does not have full row rank.
    """
    rows = as_rows(a)
    n, m = len(rows), len(rows[0])
    if m < n:
        raise RankDeficient(f"{n}x{m} matrix cannot have row rank {n}")
    if h is not None and h <= 0:
        raise ValueError("h must be positive")
    cols = transpose(rows)
    ucols = [[1 if r == c else 0 for r in range(m)] for c in range(m)]
    k = m - 1
    for i in range(n - 1, -1, -1):
        for j in range(k - 1, -1, -1):
            y = cols[j][i]
            if y == 0:
                continue
            x = cols[k][i]
            g, s, t = xgcd(x, y)
            _combine(cols, k, j, s, t, x // g, y // g)
            _combine(ucols, k, j, s, t, x // g, y // g)
        piv = cols[k][i]
        if piv == 0:
            raise RankDeficient(f"no pivot for row {i}")
        if piv < 0:
            cols[k] = [-v for v in cols[k]]
            ucols[k] = [-v for v in ucols[k]]
            piv = -piv
        for j in range(k + 1, m):
            q = cols[j][i] // piv
            if q:
                cols[j] = [v - q * w for v, w in zip(cols[j], cols[k])]
                ucols[j] = [v - q * w for v, w in zip(ucols[j], ucols[k])]
        k -= 1
    H = IntMatrix.from_rows(transpose(cols[m - n:]))
    result = HnfResult(H, IntMatrix.from_rows(transpose(ucols)))
    if h is not None and h % result.det:
        raise ValueError(f"h={h} is not a multiple of the lattice determinant {result.det}")
    return result


def hnf_modular(a: IntMatrix | Sequence[Sequence[int]], h: int) -> IntMatrix:
    """Hermite normal form computed with all entries reduced modulo ``h``.

    This is the Hafner-McCurley technique in the form of Cohen's "HNF modulo
    D" algorithm: because ``h`` times any lattice-coordinate vector lies in
    the lattice, columns may be reduced modulo the running multiple ``R``
    without changing the lattice they generate together with ``R Z^n``.

    Args:
        a: ``n x m`` matrix of rank ``n``.
        h: positive multiple of the determinant of the lattice spanned by the
            columns of ``a``.

    Returns:
        The ``n x n`` matrix ``H``; no transform is produced.
    """
    rows = as_rows(a)
    n, m = len(rows), len(rows[0])
    if h <= 0:
        raise ValueError("h must be positive")
    if m < n:
        raise RankDeficient(f"{n}x{m} matrix cannot have row rank {n}")
    if all(v == 0 for r in rows for v in r):
        raise RankDeficient("zero matrix")
    cols = [[v % h for v in c] for c in transpose(rows)]
    w: Rows = [[0] * n for _ in range(n)]
    r_mod = h
    k = m - 1
    for i in range(n - 1, -1, -1):
        for j in range(k - 1, -1, -1):
            y = cols[j][i]
            if y == 0:
                continue
            x = cols[k][i]
            g, s, t = xgcd(x, y)
            ck, cj = cols[k], cols[j]
            xg, yg = x // g, y // g
            cols[k] = [(s * p + t * q) % r_mod for p, q in zip(ck, cj)]
            cols[j] = [(xg * q - yg * p) % r_mod for p, q in zip(ck, cj)]
        g, u, _ = xgcd(cols[k][i], r_mod)
        wi = [u * v % r_mod for v in cols[k]]
        for r in range(i + 1, n):
            wi[r] = 0
        if wi[i] == 0:
            wi[i] = r_mod
        w[i] = wi
        for j in range(i + 1, n):
            q = w[j][i] // wi[i]
            if q:
                w[j] = [p - q * s for p, s in zip(w[j], wi)]
        r_mod //= g
        k = max(k - 1, 0)
    return IntMatrix.from_rows(transpose(w))


def lattice_det(a: IntMatrix | Sequence[Sequence[int]]) -> int:
    return hnf_with_transform(a).det


def is_hnf(H: IntMatrix) -> bool:
    """Shape check for the convention above (square ``H``)."""
    if not H.is_square:
        return False
    n = H.rows
    for i in range(n):
        if H[i, i] <= 0:
            return False
        for j in range(n):
            if j < i and H[i, j] != 0:
                return False
            if j > i and not 0 <= H[i, j] < H[i, i]:
                return False
    return True


def check_square(a: IntMatrix) -> None:
    if not a.is_square:
        raise DimensionError(f"expected a square matrix, got {a.rows}x{a.cols}")
