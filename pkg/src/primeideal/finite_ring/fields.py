"""Finite fields used by the field test, and polynomials over them.

:class:`PrimeField` is ``F_p`` with int elements. :class:`TowerField` is a
subfield ``F_p(v_1, ..., v_s)`` of an ``F_p``-algebra, built one minimal
polynomial at a time; its elements are coordinate tuples in the monomial
basis ``v_1^t_1 ... v_s^t_s`` (``0 <= t_j < m_j``) and arithmetic is carried
out inside the ambient algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from primeideal.finite_ring import gf
from primeideal.finite_ring.presentation import FiniteRingPresentation
from primeideal.primality import is_prime_integer

Poly = list  # coefficients, lowest degree first


class PrimeField:
    def __init__(self, p: int) -> None:
        self.p = p
        self.degree = 1

    @property
    def order(self) -> int:
        return self.p

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def from_int(self, k: int) -> int:
        return k % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        return pow(a, -1, self.p)

    def is_zero(self, a: int) -> bool:
        return a % self.p == 0

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


def algebra_identity(ring: FiniteRingPresentation, p: int) -> tuple[int, ...] | None:
    """Identity of ``ring / p ring`` found by linear algebra over ``F_p``."""
    m = ring.m
    cols = [[ring.l[i][j][k] % p for j in range(m) for k in range(m)] for i in range(m)]
    target = [1 if j == k else 0 for j in range(m) for k in range(m)]
    sol = gf.solve(cols, target, p)
    return None if sol is None else tuple(sol)


def reduce_mod_p(ring: FiniteRingPresentation, p: int) -> FiniteRingPresentation:
    """``ring / p ring`` presented on the images of the same generators."""
    if any(dk % p for dk in ring.d):
        raise ValueError(f"{p} does not divide every additive order")
    return FiniteRingPresentation.build([p] * ring.m, [[[c % p for c in cell] for cell in row] for row in ring.l])


@dataclass
class Stage:
    generator: int
    poly: Poly
    degree: int


@dataclass
class TowerField:
    """``F_p(v_g1, ..., v_gs)`` inside an algebra whose additive orders are all ``p``."""

    algebra: FiniteRingPresentation
    p: int
    one_vec: tuple[int, ...]
    stages: list[Stage] = field(default_factory=list)
    basis: list[tuple[int, ...]] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.basis:
            self.basis = [tuple(self.one_vec)]
        self._solver = gf.SpanSolver(self.basis, self.p)

    @classmethod
    def prime_subfield(cls, algebra: FiniteRingPresentation, p: int, one_vec: Sequence[int]) -> TowerField:
        return cls(algebra, p, tuple(one_vec))

    @property
    def degree(self) -> int:
        return len(self.basis)

    @property
    def order(self) -> int:
        return self.p ** self.degree

    def extend(self, generator: int, poly: Poly) -> TowerField:
        """Adjoin ``v_generator`` whose minimal polynomial over ``self`` is ``poly``."""
        k = len(poly) - 1
        v = self.algebra.generator(generator)
        powers = [tuple(self.one_vec)]
        for _ in range(k - 1):
            powers.append(self.algebra.mul(powers[-1], v))
        new_basis = [self.algebra.mul(b, pw) for pw in powers for b in self.basis]
        return TowerField(self.algebra, self.p, self.one_vec, self.stages + [Stage(generator, poly, k)], new_basis)

    def to_vector(self, a: Sequence[int]) -> tuple[int, ...]:
        p = self.p
        out = [0] * self.algebra.m
        for c, b in zip(a, self.basis):
            if c:
                for i, x in enumerate(b):
                    out[i] = (out[i] + c * x) % p
        return tuple(out)

    def from_vector(self, v: Sequence[int]) -> tuple[int, ...] | None:
        c = self._solver.coords(v)
        return None if c is None else tuple(c)

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.degree

    def one(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.degree - 1)

    def from_int(self, k: int) -> tuple[int, ...]:
        return (k % self.p,) + (0,) * (self.degree - 1)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x % self.p for x in a)

    def scale(self, k: int, a):
        return tuple(k * x % self.p for x in a)

    def mul(self, a, b):
        prod_ = self.from_vector(self.algebra.mul(self.to_vector(a), self.to_vector(b)))
        if prod_ is None:
            raise ArithmeticError("subfield is not closed under multiplication")
        return prod_

    def inv(self, a):
        cols = [self.mul(a, e) for e in self._unit_vectors()]
        sol = gf.solve(cols, self.one(), self.p)
        if sol is None:
            raise ZeroDivisionError("element is not invertible")
        return tuple(sol)

    def is_zero(self, a) -> bool:
        return not any(a)

    def _unit_vectors(self):
        n = self.degree
        return [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]

    def __repr__(self) -> str:
        return f"TowerField(p={self.p}, degree={self.degree}, stages={[s.generator for s in self.stages]})"


# --- polynomials over a field object -------------------------------------


def poly_trim(F: Any, f: Sequence) -> Poly:
    f = list(f)
    while f and F.is_zero(f[-1]):
        f.pop()
    return f


def poly_add(F: Any, f: Sequence, g: Sequence) -> Poly:
    n = max(len(f), len(g))
    z = F.zero()
    return poly_trim(F, [F.add(f[i] if i < len(f) else z, g[i] if i < len(g) else z) for i in range(n)])


def poly_sub(F: Any, f: Sequence, g: Sequence) -> Poly:
    return poly_add(F, f, [F.neg(c) for c in g])


def poly_mul(F: Any, f: Sequence, g: Sequence) -> Poly:
    if not f or not g:
        return []
    out = [F.zero()] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if F.is_zero(a):
            continue
        for j, b in enumerate(g):
            if not F.is_zero(b):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
    return poly_trim(F, out)


def poly_divmod(F: Any, f: Sequence, g: Sequence) -> tuple[Poly, Poly]:
    g = poly_trim(F, g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = poly_trim(F, f)
    if len(r) < len(g):
        return [], r
    inv_lead = F.inv(g[-1])
    q = [F.zero()] * (len(r) - len(g) + 1)
    while len(r) >= len(g) and r:
        shift = len(r) - len(g)
        c = F.mul(r[-1], inv_lead)
        q[shift] = c
        for i, b in enumerate(g):
            r[i + shift] = F.sub(r[i + shift], F.mul(c, b))
        r = poly_trim(F, r)
    return poly_trim(F, q), r


def poly_mod(F: Any, f: Sequence, g: Sequence) -> Poly:
    return poly_divmod(F, f, g)[1]


def poly_monic(F: Any, f: Sequence) -> Poly:
    f = poly_trim(F, f)
    if not f:
        return f
    inv = F.inv(f[-1])
    return [F.mul(c, inv) for c in f]


def poly_gcd(F: Any, f: Sequence, g: Sequence) -> Poly:
    a, b = poly_trim(F, f), poly_trim(F, g)
    while b:
        a, b = b, poly_mod(F, a, b)
    return poly_monic(F, a)


def poly_powmod(F: Any, base: Sequence, e: int, modulus: Sequence) -> Poly:
    result = [F.one()]
    b = poly_mod(F, base, modulus)
    while e:
        if e & 1:
            result = poly_mod(F, poly_mul(F, result, b), modulus)
        b = poly_mod(F, poly_mul(F, b, b), modulus)
        e >>= 1
    return poly_mod(F, result, modulus)


def poly_compose_mod(F: Any, f: Sequence, g: Sequence, modulus: Sequence) -> Poly:
    """``f(g) mod modulus`` by Horner's rule."""
    out: Poly = []
    for c in reversed(list(f)):
        out = poly_add(F, poly_mod(F, poly_mul(F, out, g), modulus), [c])
    return poly_mod(F, out, modulus)


def _prime_divisors(n: int) -> list[int]:
    return [r for r in range(2, n + 1) if n % r == 0 and is_prime_integer(r)]


def irreducible_over_field(f: Sequence, F: Any) -> bool:
    """Rabin's test: ``f`` of degree ``k`` over ``F_q`` is irreducible iff
    ``x^(q^k) = x mod f`` and ``gcd(x^(q^(k/r)) - x, f) = 1`` for every prime
    ``r | k``.

    ``x^(q^(j+1))`` is obtained from ``x^(q^j)`` by composing with
    ``x^q mod f``, since the coefficients are fixed by the q-th power map.
    """
    f = poly_monic(F, f)
    k = len(f) - 1
    if k < 1:
        raise ValueError("need a polynomial of degree at least 1")
    if k == 1:
        return True
    x = [F.zero(), F.one()]
    xq = poly_powmod(F, x, F.order, f)
    frob = {0: poly_mod(F, x, f), 1: xq}
    cur = xq
    for j in range(2, k + 1):
        cur = poly_compose_mod(F, cur, xq, f)
        frob[j] = cur
    if poly_sub(F, frob[k], x):
        return False
    for r in _prime_divisors(k):
        g = poly_gcd(F, poly_sub(F, frob[k // r], x), f)
        if len(g) > 1:
            return False
    return True
