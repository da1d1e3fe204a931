"""Brute-force oracles for small quotient rings.

Nothing here calls into the main decision path: the ideal lattice, coset
representatives, and ring tables are all computed independently so the
oracles can be used to check it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

import numpy as np

from primeideal.errors import CapExceeded

DEFAULT_CAP = 4096
_INT64_SAFE = 1 << 62


@dataclass
class EnumeratedRing:
    """All elements of a finite ring with full addition and multiplication tables.

    ``elements[i]`` is the coset representative (or presentation vector) of
    element ``i``; tables hold element indices.
    """

    elements: np.ndarray
    add: np.ndarray
    mul: np.ndarray
    zero: int
    one: int | None

    @property
    def size(self) -> int:
        return len(self.elements)


def _triangular_basis(gens: list[list[int]], n: int) -> list[list[int]]:
    """Upper-triangular lattice basis ``b_k`` (``b_k[j] = 0`` for ``j > k``,
    ``b_k[k] > 0``) of the lattice spanned by ``gens``, by plain Euclid."""
    active = [list(g) for g in gens if any(g)]
    basis: list[list[int] | None] = [None] * n
    for k in range(n - 1, -1, -1):
        while True:
            nz = [v for v in active if v[k] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda v: abs(v[k]))
            piv = nz[0]
            for v in nz[1:]:
                q = v[k] // piv[k]
                for t in range(n):
                    v[t] -= q * piv[t]
        nz = [v for v in active if v[k] != 0]
        if not nz:
            raise ValueError("ideal lattice does not have full rank")
        b = nz[0]
        active = [v for v in active if v is not b]
        if b[k] < 0:
            b = [-x for x in b]
        basis[k] = b
    return basis  # type: ignore[return-value]


def _order_mul(table, x, y):
    n = len(x)
    out = [0] * n
    for i in range(n):
        for j in range(n):
            if x[i] and y[j]:
                for k in range(n):
                    out[k] += x[i] * y[j] * table[i][j][k]
    return out


def ideal_lattice_basis(order, alpha: Sequence[int], beta: Sequence[int]) -> list[list[int]]:
    n = order.n
    table = order.table
    units = [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    gens = [_order_mul(table, g, w) for g in (alpha, beta) for w in units]
    return _triangular_basis(gens, n)


def _reduce_rows(p: np.ndarray, basis: list[list[int]], det: int) -> np.ndarray:
    """Canonical representatives of each row of ``p`` (shape ``(..., n)``).

    ``det * Z^n`` lies in the lattice, so coordinates are first taken modulo
    ``det`` to keep intermediate values small.
    """
    p = p % det
    n = len(basis)
    for k in range(n - 1, -1, -1):
        b = np.array(basis[k], dtype=p.dtype)
        q = p[..., k] // basis[k][k]
        p = p - q[..., None] * b
    return p


def _size_reduce(basis: list[list[int]]) -> list[list[int]]:
    out = [list(b) for b in basis]
    for k in range(len(out)):
        for j in range(k - 1, -1, -1):
            q = out[k][j] // out[j][j]
            if q:
                out[k] = [x - q * y for x, y in zip(out[k], out[j])]
    return out


def _index(p: np.ndarray, radix: list[int]) -> np.ndarray:
    idx = np.zeros(p.shape[:-1], dtype=np.int64)
    for k in range(len(radix) - 1, -1, -1):
        idx = idx * radix[k] + p[..., k].astype(np.int64)
    return idx


def _mixed_radix_elements(radix: list[int]) -> list[tuple[int, ...]]:
    # element index = x_0 + r_0 (x_1 + r_1 (...)), matching _index
    return [tuple(reversed(t)) for t in product(*[range(r) for r in reversed(radix)])]


def _tables(elements: np.ndarray, mul_coords, reduce, radix: list[int], dtype) -> tuple[np.ndarray, np.ndarray]:
    size = len(elements)
    add = np.empty((size, size), dtype=np.int32)
    mul = np.empty((size, size), dtype=np.int32)
    chunk = max(1, (1 << 21) // max(size, 1))
    for start in range(0, size, chunk):
        xa = elements[start:start + chunk]
        s = reduce(xa[:, None, :] + elements[None, :, :])
        add[start:start + chunk] = _index(s, radix)
        pr = reduce(mul_coords(xa, elements))
        mul[start:start + chunk] = _index(pr, radix)
    return add, mul


def _find_one(mul: np.ndarray) -> int | None:
    target = np.arange(mul.shape[0])
    hits = np.nonzero((mul == target[None, :]).all(axis=1))[0]
    return int(hits[0]) if len(hits) else None


def enumerate_quotient(order, ideal, cap: int = DEFAULT_CAP) -> EnumeratedRing:
    """Enumerate ``O/I`` through coset representatives of the ideal lattice."""
    n = order.n
    basis = _size_reduce(ideal_lattice_basis(order, ideal.alpha, ideal.beta))
    radix = [basis[k][k] for k in range(n)]
    size = 1
    for r in radix:
        size *= r
    if size > cap:
        raise CapExceeded(f"quotient has {size} elements, cap is {cap}")
    tmax = max(abs(c) for row in order.table for cell in row for c in cell)
    rmax = max(radix)
    bound = max(n * n * rmax * rmax * max(tmax, 1), size * (size + 1) ** n)
    dtype = np.int64 if bound < _INT64_SAFE else object
    elements = np.array(_mixed_radix_elements(radix), dtype=dtype).reshape(size, n)
    c = np.array(order.table, dtype=dtype)

    def mul_coords(xa, xb):
        y = np.tensordot(xb, c, axes=([1], [1]))  # (b, i, k)
        return np.tensordot(xa, y, axes=([1], [1]))  # (a, b, k)

    add, mul = _tables(elements, mul_coords, lambda p: _reduce_rows(p, basis, size), radix, dtype)
    zero = 0
    return EnumeratedRing(elements, add, mul, zero, _find_one(mul))


def enumerate_presentation(ring, cap: int = DEFAULT_CAP) -> EnumeratedRing:
    """Enumerate a basis representation ``(m; d; l)`` directly."""
    d = list(ring.d)
    size = 1
    for x in d:
        size *= x
    if size > cap:
        raise CapExceeded(f"ring has {size} elements, cap is {cap}")
    m = len(d)
    lmax = max(c for row in ring.l for cell in row for c in cell)
    bound = m * m * max(d) ** 2 * max(lmax, 1)
    dtype = np.int64 if bound < _INT64_SAFE else object
    elements = np.array(_mixed_radix_elements(d), dtype=dtype).reshape(size, m)
    l = np.array(ring.l, dtype=dtype)
    dv = np.array(d, dtype=dtype)

    def mul_coords(xa, xb):
        y = np.tensordot(xb, l, axes=([1], [1]))
        return np.tensordot(xa, y, axes=([1], [1]))

    add, mul = _tables(elements, mul_coords, lambda p: p % dv, d, dtype)
    return EnumeratedRing(elements, add, mul, 0, _find_one(mul))


def _units(e: EnumeratedRing) -> np.ndarray:
    if e.one is None:
        raise ValueError("enumerated ring has no identity")
    return (e.mul == e.one).any(axis=1)


def oracle_is_field(e: EnumeratedRing) -> bool:
    """Every nonzero element is invertible (and ``1 != 0``)."""
    if e.size < 2:
        return False
    units = _units(e)
    return bool(units.sum() == e.size - 1 and not units[e.zero])


def oracle_is_local(e: EnumeratedRing) -> bool:
    """The non-units form an ideal: closed under addition and absorption."""
    if e.size < 2:
        return False
    nonunits = np.nonzero(~_units(e))[0]
    is_nonunit = np.zeros(e.size, dtype=bool)
    is_nonunit[nonunits] = True
    sums = e.add[np.ix_(nonunits, nonunits)]
    if not is_nonunit[sums].all():
        return False
    return bool(is_nonunit[e.mul[nonunits, :]].all())
