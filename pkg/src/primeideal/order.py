"""Finite-rank orders given by a multiplication table, and their ideals.

An order ``O`` of rank ``n`` has a Z-basis ``w_1..w_n`` with
``w_i w_j = sum_k table[i][j][k] w_k``. Elements are coordinate tuples
relative to that basis.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import isqrt
from pathlib import Path
from typing import Sequence

from primeideal.errors import DimensionError, NotADomain, RankDeficient
from primeideal.linalg import IntMatrix, det_modular, hnf_modular
from primeideal.linalg.matrix import transpose

Element = tuple[int, ...]


@dataclass(frozen=True)
class OrderPresentation:
    n: int
    table: tuple[tuple[tuple[int, ...], ...], ...]
    one: Element

    def __post_init__(self) -> None:
        n = self.n
        if n < 1:
            raise DimensionError("rank must be at least 1")
        if len(self.one) != n or len(self.table) != n:
            raise DimensionError("table/identity do not match the rank")
        for row in self.table:
            if len(row) != n or any(len(c) != n for c in row):
                raise DimensionError("multiplication table must be n x n x n")

    @classmethod
    def build(cls, table: Sequence[Sequence[Sequence[int]]], one: Sequence[int]) -> OrderPresentation:
        t = tuple(tuple(tuple(int(c) for c in cell) for cell in row) for row in table)
        return cls(len(t), t, tuple(int(x) for x in one))

    @property
    def T(self) -> int:
        """Largest absolute value in the table."""
        return max(abs(c) for row in self.table for cell in row for c in cell)

    def element(self, coords: Sequence[int]) -> Element:
        if len(coords) != self.n:
            raise DimensionError(f"expected {self.n} coordinates, got {len(coords)}")
        return tuple(int(x) for x in coords)

    def basis(self, i: int) -> Element:
        return tuple(1 if j == i else 0 for j in range(self.n))

    def scalar(self, a: int) -> Element:
        return tuple(a * c for c in self.one)

    def zero(self) -> Element:
        return (0,) * self.n

    def add(self, x: Sequence[int], y: Sequence[int]) -> Element:
        self._check(x, y)
        return tuple(a + b for a, b in zip(x, y))

    def neg(self, x: Sequence[int]) -> Element:
        self._check(x)
        return tuple(-a for a in x)

    def mul(self, x: Sequence[int], y: Sequence[int]) -> Element:
        self._check(x, y)
        n = self.n
        out = [0] * n
        for i, a in enumerate(x):
            if a == 0:
                continue
            row = self.table[i]
            for j, b in enumerate(y):
                if b == 0:
                    continue
                ab = a * b
                for k, c in enumerate(row[j]):
                    if c:
                        out[k] += ab * c
        return tuple(out)

    def _check(self, *elems: Sequence[int]) -> None:
        for e in elems:
            if len(e) != self.n:
                raise DimensionError(f"element of length {len(e)} in an order of rank {self.n}")

    def to_json(self) -> dict:
        return {"rank": self.n, "one": list(self.one), "table": [[list(c) for c in row] for row in self.table]}

    @classmethod
    def from_json(cls, data: dict) -> OrderPresentation:
        order = cls.build(data["table"], data["one"])
        if "rank" in data and int(data["rank"]) != order.n:
            raise DimensionError(f"declared rank {data['rank']} but table has rank {order.n}")
        return order

    @classmethod
    def load(cls, path: str | Path) -> OrderPresentation:
        return cls.from_json(json.loads(Path(path).read_text()))


@dataclass(frozen=True)
class TwoGenIdeal:
    """The ideal ``O alpha + O beta``."""

    alpha: Element
    beta: Element

    def __post_init__(self) -> None:
        if len(self.alpha) != len(self.beta):
            raise DimensionError("generators have different lengths")
        if not any(self.alpha) and not any(self.beta):
            raise ValueError("the zero ideal is not allowed")

    @classmethod
    def of(cls, alpha: Sequence[int], beta: Sequence[int]) -> TwoGenIdeal:
        return cls(tuple(int(x) for x in alpha), tuple(int(x) for x in beta))

    @classmethod
    def from_json(cls, data: dict) -> TwoGenIdeal:
        return cls.of(data["alpha"], data["beta"])

    def to_json(self) -> dict:
        return {"alpha": list(self.alpha), "beta": list(self.beta)}

    @property
    def generators(self) -> tuple[Element, ...]:
        return tuple(g for g in (self.alpha, self.beta) if any(g))


@dataclass
class ValidationReport:
    violations: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [{"kind": kind, "indices": [i + 1 for i in idx]} for kind, idx in self.violations],
        }


def validate_order(order: OrderPresentation) -> ValidationReport:
    """Check commutativity, associativity and the declared identity.

    Indices in the report are 0-based triples (pairs for commutativity).
    Passing says the table is a commutative ring with identity; it says
    nothing about whether the ring is a Dedekind domain.
    """
    report = ValidationReport()
    n, t = order.n, order.table
    for i in range(n):
        for j in range(i + 1, n):
            if t[i][j] != t[j][i]:
                report.violations.append(("commutativity", (i, j)))
    w = [order.basis(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            wij = t[i][j]
            for k in range(n):
                if order.mul(wij, w[k]) != order.mul(w[i], t[j][k]):
                    report.violations.append(("associativity", (i, j, k)))
    for i in range(n):
        if order.mul(order.one, w[i]) != w[i]:
            report.violations.append(("identity", (i,)))
    return report


def mul_elements(order: OrderPresentation, x: Sequence[int], y: Sequence[int]) -> Element:
    return order.mul(x, y)


def add_elements(order: OrderPresentation, x: Sequence[int], y: Sequence[int]) -> Element:
    return order.add(x, y)


def neg_element(order: OrderPresentation, x: Sequence[int]) -> Element:
    return order.neg(x)


def regular_representation(order: OrderPresentation, x: Sequence[int]) -> IntMatrix:
    """Matrix whose row ``i`` holds the coordinates of ``x * w_i``."""
    order._check(x)
    n, t = order.n, order.table
    rows = [[sum(x[k] * t[k][i][j] for k in range(n) if x[k]) for j in range(n)] for i in range(n)]
    return IntMatrix.from_rows(rows)


def element_norm(order: OrderPresentation, x: Sequence[int]) -> int:
    """``|det|`` of the regular representation; 0 exactly for zero divisors."""
    return abs(det_modular(regular_representation(order, x).to_rows()))


def norm_multiple(order: OrderPresentation, ideal: TwoGenIdeal) -> int:
    """A positive multiple ``h`` of the norms of both generators.

    ``h = N(alpha) N(beta) = |det(A B)|``; with a zero generator only the
    other one contributes.

    Raises:
        NotADomain: a nonzero generator has norm 0.
    """
    h = 1
    for g in ideal.generators:
        nrm = element_norm(order, g)
        if nrm == 0:
            raise NotADomain(f"nonzero element {list(g)} has norm 0")
        h *= nrm
    return h


def lemma_bound(order: OrderPresentation, ideal: TwoGenIdeal) -> int:
    """``ceil(n^(7n/2) T^(4n))``, the a-priori ceiling on :func:`norm_multiple`."""
    n = order.n
    t = max(order.T, *(abs(c) for c in ideal.alpha + ideal.beta))
    s = n ** (7 * n)
    root = isqrt(s)
    if root * root != s:
        root += 1
    return root * t ** (4 * n)


def principal_hnf(order: OrderPresentation, x: Sequence[int], h: int) -> IntMatrix:
    """HNF of the lattice ``O x`` (columns are coordinates of ``x w_i``)."""
    reg_t = regular_representation(order, x).transpose()
    try:
        return hnf_modular(reg_t.to_rows(), h)
    except RankDeficient as exc:
        raise NotADomain(f"element {list(x)} generates a lattice of lower rank") from exc


def ideal_hnf_basis(order: OrderPresentation, ideal: TwoGenIdeal, h: int | None = None) -> tuple[IntMatrix, int]:
    """HNF basis matrix ``H_M`` of the ideal and its norm ``det(H_M)``.

    A supplied ``h`` is checked against both generator norms: the modular
    HNF silently computes the lattice ``I + hO`` when ``h`` is wrong.
    """
    if h is None:
        h = norm_multiple(order, ideal)
    elif h <= 0:
        raise ValueError("h must be positive")
    else:
        for g in ideal.generators:
            nrm = element_norm(order, g)
            if nrm == 0:
                raise NotADomain(f"nonzero element {list(g)} has norm 0")
            if h % nrm:
                raise ValueError(f"h={h} is not a multiple of N({list(g)})={nrm}")
    blocks = [principal_hnf(order, g, h).to_rows() for g in ideal.generators]
    if len(blocks) == 1:
        hm = IntMatrix.from_rows(blocks[0])
    else:
        m = [ra + rb for ra, rb in zip(*blocks)]
        hm = hnf_modular(m, h)
    norm = 1
    for d in hm.diagonal_entries():
        norm *= d
    return hm, norm


def lattice_hnf(order: OrderPresentation, gens: Sequence[Sequence[int]], h: int) -> IntMatrix:
    """HNF of the ideal generated by ``gens`` (``h`` a multiple of its norm)."""
    cols: list[list[int]] = []
    for g in gens:
        if any(g):
            cols.extend(regular_representation(order, g).to_rows())
    if not cols:
        raise ValueError("zero ideal")
    try:
        return hnf_modular(transpose(cols), h)
    except RankDeficient as exc:
        raise NotADomain("generators span a lattice of lower rank") from exc


def ideal_product(order: OrderPresentation, i1: TwoGenIdeal, i2: TwoGenIdeal) -> tuple[IntMatrix, int]:
    """HNF basis and norm of ``I J`` from the four pairwise generator products."""
    prods = [order.mul(a, b) for a in i1.generators for b in i2.generators]
    h = 1
    for p in prods:
        if any(p):
            h = element_norm(order, p)
            if h == 0:
                raise NotADomain(f"nonzero element {list(p)} has norm 0")
            break
    hm = lattice_hnf(order, prods, h)
    norm = 1
    for d in hm.diagonal_entries():
        norm *= d
    return hm, norm
