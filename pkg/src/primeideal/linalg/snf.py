"""Smith normal form of nonsingular square integer matrices.

Invariant factors are stored in decreasing-divisibility order: ``S =
diag(d_1, ..., d_n)`` with ``d_{i+1} | d_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Sequence

from primeideal.errors import DimensionError, Singular
from primeideal.linalg.hnf import xgcd
from primeideal.linalg.matrix import IntMatrix, Rows, as_rows, identity_rows


@dataclass(frozen=True)
class SnfResult:
    """``V @ B @ U == S``."""

    S: IntMatrix
    U: IntMatrix
    V: IntMatrix

    @property
    def invariants(self) -> list[int]:
        return self.S.diagonal_entries()


def _row_combine(a: Rows, r: int, i: int, s: int, t: int, x: int, y: int) -> None:
    ar, ai = a[r], a[i]
    a[r] = [s * p + t * q for p, q in zip(ar, ai)]
    a[i] = [x * q - y * p for p, q in zip(ar, ai)]


def _col_combine(a: Rows, c: int, j: int, s: int, t: int, x: int, y: int) -> None:
    for row in a:
        p, q = row[c], row[j]
        row[c] = s * p + t * q
        row[j] = x * q - y * p


def _swap_cols(a: Rows, c: int, j: int) -> None:
    for row in a:
        row[c], row[j] = row[j], row[c]


def _square_rows(b: IntMatrix | Sequence[Sequence[int]]) -> Rows:
    rows = as_rows(b)
    if len(rows) != len(rows[0]):
        raise DimensionError("Smith normal form is only provided for square matrices")
    return rows


def snf_with_transforms(b: IntMatrix | Sequence[Sequence[int]], h: int | None = None) -> SnfResult:
    """Smith normal form with unimodular ``U``, ``V`` such that ``V B U = S``.

    Raises:
        Singular: if ``det b == 0``.
    """
    a = _square_rows(b)
    n = len(a)
    v = identity_rows(n)
    u = identity_rows(n)
    for t in range(n):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    x = a[i][j]
                    if x and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                raise Singular("matrix is singular")
            i, j = best
            if i != t:
                a[t], a[i] = a[i], a[t]
                v[t], v[i] = v[i], v[t]
            if j != t:
                _swap_cols(a, t, j)
                _swap_cols(u, t, j)
            for i in range(t + 1, n):
                y = a[i][t]
                if y:
                    x = a[t][t]
                    g, s, c = xgcd(x, y)
                    _row_combine(a, t, i, s, c, x // g, y // g)
                    _row_combine(v, t, i, s, c, x // g, y // g)
            for j in range(t + 1, n):
                y = a[t][j]
                if y:
                    x = a[t][t]
                    g, s, c = xgcd(x, y)
                    _col_combine(a, t, j, s, c, x // g, y // g)
                    _col_combine(u, t, j, s, c, x // g, y // g)
            if any(a[i][t] for i in range(t + 1, n)):
                continue
            piv = a[t][t]
            bad = next((i for i in range(t + 1, n) for j in range(t + 1, n) if a[i][j] % piv), None)
            if bad is None:
                break
            a[t] = [p + q for p, q in zip(a[t], a[bad])]
            v[t] = [p + q for p, q in zip(v[t], v[bad])]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            v[t] = [-x for x in v[t]]
    # Increasing chain internally; store reversed, except that runs of equal
    # invariants keep their original order (permuting inside a run fixes S).
    inc = [a[i][i] for i in range(n)]
    order: list[int] = []
    start = 0
    while start < n:
        end = start
        while end + 1 < n and inc[end + 1] == inc[start]:
            end += 1
        order = list(range(start, end + 1)) + order
        start = end + 1
    v = [v[i] for i in order]
    u = [[row[i] for i in order] for row in u]
    diag = [inc[i] for i in order]
    result = SnfResult(IntMatrix.diagonal(diag), IntMatrix.from_rows(u), IntMatrix.from_rows(v))
    if h is not None and h % prod(diag):
        raise ValueError(f"h={h} is not a multiple of det = {prod(diag)}")
    return result


def _unit_scaling(e: int, g: int, h: int) -> int:
    """A unit ``c`` modulo ``h`` with ``c * e = g (mod h)`` where ``g = gcd(e, h)``."""
    hp = h // g
    c = pow(e // g, -1, hp) if hp > 1 else 0
    while gcd(c, h) != 1:
        c += hp
    return c


def snf_modular_diagonal(b: IntMatrix | Sequence[Sequence[int]], h: int) -> list[int]:
    """Invariant factors computed with every entry reduced modulo ``h``.

    ``h`` must be a positive multiple of ``det b``; then ``h Z^n`` lies in the
    column lattice and the quotient group is unchanged by working modulo ``h``.
    Returned in decreasing-divisibility order.
    """
    if h <= 0:
        raise ValueError("h must be positive")
    a = [[x % h for x in r] for r in _square_rows(b)]
    n = len(a)
    diag = []
    for t in range(n):
        while True:
            best, best_g = None, h
            for i in range(t, n):
                for j in range(t, n):
                    g = gcd(a[i][j], h)
                    if g < best_g:
                        best, best_g = (i, j), g
            if best is None:
                diag.extend([h] * (n - t))
                return diag[::-1]
            i, j = best
            a[t], a[i] = a[i], a[t]
            _swap_cols(a, t, j)
            c = _unit_scaling(a[t][t], best_g, h)
            a[t] = [c * x % h for x in a[t]]
            restart = False
            for i in range(t + 1, n):
                y = a[i][t]
                if y == 0:
                    continue
                if y % best_g:
                    x = a[t][t]
                    g, s, co = xgcd(x, y)
                    _row_combine(a, t, i, s, co, x // g, y // g)
                    a[t] = [z % h for z in a[t]]
                    a[i] = [z % h for z in a[i]]
                    restart = True
                    break
                q = y // best_g
                a[i] = [(p - q * r) % h for p, r in zip(a[i], a[t])]
            if restart:
                continue
            for j in range(t + 1, n):
                y = a[t][j]
                if y == 0:
                    continue
                if y % best_g:
                    x = a[t][t]
                    g, s, co = xgcd(x, y)
                    _col_combine(a, t, j, s, co, x // g, y // g)
                    for row in a:
                        row[t] %= h
                        row[j] %= h
                    restart = True
                    break
                a[t][j] = 0  # column op: col_j -= q col_t; column t is zero below row t
            if restart:
                continue
            bad = next((i for i in range(t + 1, n) for j in range(t + 1, n) if a[i][j] % best_g), None)
            if bad is None:
                diag.append(best_g)
                break
            a[t] = [(p + q) % h for p, q in zip(a[t], a[bad])]
    return diag[::-1]
