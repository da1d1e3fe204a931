"""Basis representations of finite commutative rings.

A presentation ``(m; d_1..d_m; l)`` describes the ring whose additive group is
``Z/d_1 v_1 + ... + Z/d_m v_m`` with ``v_i v_j = sum_k l[i][j][k] v_k``.
Elements are tuples ``(x_1..x_m)`` with ``0 <= x_i < d_i``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Sequence

from primeideal.errors import DimensionError, InvalidPresentation
from primeideal.linalg import hnf_with_transform
from primeideal.linalg.matrix import matvec

RingElement = tuple[int, ...]


@dataclass(frozen=True)
class FiniteRingPresentation:
    m: int
    d: tuple[int, ...]
    l: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self) -> None:
        m = self.m
        if m < 1 or len(self.d) != m:
            raise InvalidPresentation("need m >= 1 and m additive orders")
        if any(x < 2 for x in self.d):
            raise InvalidPresentation("every d_i must be at least 2")
        if any(self.d[i] % self.d[i + 1] for i in range(m - 1)):
            raise InvalidPresentation(f"divisibility chain d_(i+1) | d_i fails for {self.d}")
        if len(self.l) != m or any(len(r) != m or any(len(c) != m for c in r) for r in self.l):
            raise InvalidPresentation("structure constants must be m x m x m")
        for row in self.l:
            for cell in row:
                if any(not 0 <= c < dk for c, dk in zip(cell, self.d)):
                    raise InvalidPresentation("structure constants are not reduced")

    @classmethod
    def build(cls, d: Sequence[int], l: Sequence[Sequence[Sequence[int]]]) -> FiniteRingPresentation:
        dd = tuple(int(x) for x in d)
        ll = tuple(tuple(tuple(int(c) % dk for c, dk in zip(cell, dd)) for cell in row) for row in l)
        return cls(len(dd), dd, ll)

    @property
    def size(self) -> int:
        out = 1
        for x in self.d:
            out *= x
        return out

    def element(self, coords: Sequence[int]) -> RingElement:
        if len(coords) != self.m:
            raise DimensionError(f"expected {self.m} coordinates")
        return tuple(int(x) % dk for x, dk in zip(coords, self.d))

    def generator(self, i: int) -> RingElement:
        return tuple(1 if j == i else 0 for j in range(self.m))

    def zero(self) -> RingElement:
        return (0,) * self.m

    def add(self, x: Sequence[int], y: Sequence[int]) -> RingElement:
        self._check(x, y)
        return tuple((a + b) % dk for a, b, dk in zip(x, y, self.d))

    def neg(self, x: Sequence[int]) -> RingElement:
        self._check(x)
        return tuple(-a % dk for a, dk in zip(x, self.d))

    def mul(self, x: Sequence[int], y: Sequence[int]) -> RingElement:
        self._check(x, y)
        m = self.m
        acc = [0] * m
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.l[i]
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(row[j]):
                    if c:
                        acc[k] += ab * c
        return tuple(v % dk for v, dk in zip(acc, self.d))

    def pow(self, x: Sequence[int], e: int) -> RingElement:
        if e < 0:
            raise ValueError("negative exponent")
        result = self.identity
        base = tuple(x)
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def _check(self, *elems: Sequence[int]) -> None:
        for e in elems:
            if len(e) != self.m:
                raise DimensionError(f"element of length {len(e)} in a presentation with m={self.m}")

    @cached_property
    def identity(self) -> RingElement:
        """The multiplicative identity.

        Solves ``sum_i e_i l[i][j][k] = delta_jk (mod d_k)`` for all ``j, k``
        as an integer system with one slack column ``d_k`` per equation.

        Raises:
            InvalidPresentation: if no identity exists.
        """
        m = self.m
        eqs = [(j, k) for j in range(m) for k in range(m)]
        nrow = len(eqs)
        a = []
        for r, (j, k) in enumerate(eqs):
            row = [self.l[i][j][k] for i in range(m)]
            row += [self.d[k] if s == r else 0 for s in range(nrow)]
            a.append(row)
        b = [1 if j == k else 0 for j, k in eqs]
        res = hnf_with_transform(a)
        H = res.H.to_rows()
        y = [0] * nrow
        for i in range(nrow - 1, -1, -1):
            rhs = b[i] - sum(H[i][j] * y[j] for j in range(i + 1, nrow))
            if rhs % H[i][i]:
                raise InvalidPresentation("presentation has no multiplicative identity")
            y[i] = rhs // H[i][i]
        ncols = m + nrow
        x = matvec(res.U.to_rows(), [0] * (ncols - nrow) + y)
        return tuple(x[i] % self.d[i] for i in range(m))

    def check_ring_axioms(self) -> list[tuple[str, tuple[int, ...]]]:
        """Commutativity and associativity on generators, modulo the d's."""
        m = self.m
        bad: list[tuple[str, tuple[int, ...]]] = []
        for i in range(m):
            for j in range(i + 1, m):
                if self.l[i][j] != self.l[j][i]:
                    bad.append(("commutativity", (i, j)))
        gens = [self.generator(i) for i in range(m)]
        for i in range(m):
            for j in range(m):
                vij = self.l[i][j]
                for k in range(m):
                    if self.mul(vij, gens[k]) != self.mul(gens[i], self.l[j][k]):
                        bad.append(("associativity", (i, j, k)))
        for i in range(m):
            for j in range(m):
                for k, c in enumerate(self.l[i][j]):
                    # d_i v_i = 0 forces d_i l_ijk = 0 mod d_k
                    if self.d[i] * c % self.d[k]:
                        bad.append(("torsion", (i, j, k)))
        return bad

    def to_json(self) -> dict:
        return {"m": self.m, "d": list(self.d), "l": [[list(c) for c in row] for row in self.l]}

    @classmethod
    def from_json(cls, data: dict) -> FiniteRingPresentation:
        pres = cls.build(data["d"], data["l"])
        if "m" in data and int(data["m"]) != pres.m:
            raise InvalidPresentation(f"declared m={data['m']} but d has length {pres.m}")
        return pres

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def load(cls, path: str | Path) -> FiniteRingPresentation:
        return cls.from_json(json.loads(Path(path).read_text()))


def ring_add(x: Sequence[int], y: Sequence[int], ring: FiniteRingPresentation) -> RingElement:
    return ring.add(x, y)


def ring_mul(x: Sequence[int], y: Sequence[int], ring: FiniteRingPresentation) -> RingElement:
    return ring.mul(x, y)


def ring_pow(x: Sequence[int], e: int, ring: FiniteRingPresentation) -> RingElement:
    return ring.pow(x, e)
