"""Generators shared by several test modules."""

from __future__ import annotations

import random
from typing import Sequence

from hypothesis import strategies as st

from primeideal.finite_ring import FiniteRingPresentation
from primeideal.finite_ring.gf import SpanSolver, rank
from primeideal.order import OrderPresentation, TwoGenIdeal


def random_ideal(rng: random.Random, order: OrderPresentation, bound: int) -> TwoGenIdeal:
    n = order.n
    while True:
        a = [rng.randint(-bound, bound) for _ in range(n)]
        b = [rng.randint(-bound, bound) for _ in range(n)]
        if rng.random() < 0.3:
            b = [0] * n
        if rng.random() < 0.3:
            a = [rng.randint(1, bound)] + [0] * (n - 1)
        if any(a) or any(b):
            return TwoGenIdeal.of(a, b)


def random_matrix(rng: random.Random, rows: int, cols: int, bound: int) -> list[list[int]]:
    return [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]


def monomial_algebra(p: int, modulus: Sequence[int], k: int = 1) -> FiniteRingPresentation:
    """``(Z/p^k)[x]/(f)`` on the basis ``1, x, ..., x^(n-1)``.

    ``modulus`` lists the low coefficients of the monic ``f`` (leading 1 omitted).
    """
    q = p**k
    n = len(modulus)
    powers = [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    for _ in range(n, 2 * n - 1):
        prev = powers[-1]
        top = prev[-1]
        shifted = [0] + prev[:-1]
        powers.append([(s - top * c) % q for s, c in zip(shifted, modulus)])
    l = [[powers[i + j] for j in range(n)] for i in range(n)]
    return FiniteRingPresentation.build([q] * n, l)


def change_basis(ring: FiniteRingPresentation, p: int, new_basis: Sequence[Sequence[int]]) -> FiniteRingPresentation:
    """Re-present an ``F_p``-algebra (all ``d_i = p``) on another basis."""
    m = ring.m
    if rank(new_basis, p) != m:
        raise ValueError("not a basis")
    solver = SpanSolver(new_basis, p)
    l = [[solver.coords(ring.mul(a, b)) for b in new_basis] for a in new_basis]
    return FiniteRingPresentation.build([p] * m, l)


def random_basis(rng: random.Random, m: int, p: int) -> list[list[int]]:
    while True:
        b = [[rng.randrange(p) for _ in range(m)] for _ in range(m)]
        if rank(b, p) == m:
            return b


def product_ring(r1: FiniteRingPresentation, r2: FiniteRingPresentation) -> FiniteRingPresentation:
    """Direct product, as long as the combined ``d`` stays a divisibility chain."""
    m1, m2 = r1.m, r2.m
    m = m1 + m2
    l = [[[0] * m for _ in range(m)] for _ in range(m)]
    for i in range(m1):
        for j in range(m1):
            l[i][j][:m1] = r1.l[i][j]
    for i in range(m2):
        for j in range(m2):
            l[m1 + i][m1 + j][m1:] = r2.l[i][j]
    return FiniteRingPresentation.build(list(r1.d) + list(r2.d), l)


F4 = FiniteRingPresentation.build([2, 2], [[[1, 0], [0, 1]], [[0, 1], [1, 1]]])
F9 = FiniteRingPresentation.build([3, 3], [[[1, 0], [0, 1]], [[0, 1], [2, 0]]])
Z9 = FiniteRingPresentation.build([9], [[[1]]])
F2xF2 = FiniteRingPresentation.build([2, 2], [[[1, 0], [0, 0]], [[0, 0], [0, 1]]])


# seeded generators: rejection loops inside helpers stay cheap for every example
rngs = st.integers(0, 2**32 - 1).map(random.Random)
