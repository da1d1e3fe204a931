"""Inverse of an integer matrix over ``Z/hZ`` for composite ``h``."""

from __future__ import annotations

from math import gcd
from typing import Sequence

from primeideal.errors import DimensionError, NotUnimodular
from primeideal.linalg.hnf import xgcd
from primeideal.linalg.matrix import IntMatrix, as_rows


def inverse_mod(v: IntMatrix | Sequence[Sequence[int]], h: int) -> IntMatrix:
    """Row-reduce ``(v | I)`` over ``Z/hZ``.

    Pivots are gathered with extended-gcd row combinations (unimodular over
    the integers), so no division by non-units is ever attempted.

    Returns:
        ``w`` with entries in ``[0, h)`` and ``v @ w = I (mod h)``.

    Raises:
        NotUnimodular: if ``det v`` is not a unit modulo ``h``.
    """
    if h < 2:
        raise ValueError("modulus must be at least 2")
    rows = as_rows(v)
    n = len(rows)
    if n != len(rows[0]):
        raise DimensionError("inverse_mod needs a square matrix")
    a = [[x % h for x in r] + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(rows)]
    for c in range(n):
        for i in range(c + 1, n):
            y = a[i][c]
            if y == 0:
                continue
            x = a[c][c]
            g, s, t = xgcd(x, y)
            xg, yg = x // g, y // g
            rc, ri = a[c], a[i]
            a[c] = [(s * p + t * q) % h for p, q in zip(rc, ri)]
            a[i] = [(xg * q - yg * p) % h for p, q in zip(rc, ri)]
        piv = a[c][c]
        if gcd(piv, h) != 1:
            raise NotUnimodular(f"matrix is not invertible modulo {h}")
        inv = pow(piv, -1, h)
        a[c] = [x * inv % h for x in a[c]]
        for i in range(n):
            f = a[i][c]
            if i != c and f:
                a[i] = [(p - f * q) % h for p, q in zip(a[i], a[c])]
    return IntMatrix.from_rows(r[n:] for r in a)
