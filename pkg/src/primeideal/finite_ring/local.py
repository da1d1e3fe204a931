"""Local-ring test for basis-represented finite rings.

A finite commutative ring ``R`` is local iff its order is a power of a
single prime ``p`` and ``A = R/pR`` is local (``p`` is nilpotent in ``R``, so
``pR`` lies in every maximal ideal). On the ``F_p``-algebra ``A`` the
Frobenius map ``x -> x^p`` is linear, and the nilradical is the kernel of its
``e``-th iterate once ``p^e >= dim A``. ``A`` is local iff ``A/Nil(A)`` is a
field.
"""

from __future__ import annotations

from dataclasses import dataclass

from primeideal.errors import InvalidPresentation
from primeideal.finite_ring import gf
from primeideal.finite_ring.field_test import FieldTestResult, field_test
from primeideal.finite_ring.fields import algebra_identity, reduce_mod_p
from primeideal.finite_ring.presentation import FiniteRingPresentation
from primeideal.primality import prime_power_base


def _pow_nonunital(ring: FiniteRingPresentation, x: tuple[int, ...], e: int) -> tuple[int, ...]:
    # e >= 1, so no identity is needed
    result = None
    base = x
    while e:
        if e & 1:
            result = base if result is None else ring.mul(result, base)
        e >>= 1
        if e:
            base = ring.mul(base, base)
    return result


def frobenius_matrix(algebra: FiniteRingPresentation, p: int) -> list[list[int]]:
    """Matrix (acting on column vectors) of ``x -> x^p`` on ``F_p^m``."""
    m = algebra.m
    cols = [_pow_nonunital(algebra, algebra.generator(j), p) for j in range(m)]
    return [[cols[j][i] % p for j in range(m)] for i in range(m)]


def nilradical_mod_p(algebra: FiniteRingPresentation, p: int) -> list[list[int]]:
    """``F_p``-basis of the nilpotent elements of an algebra with all ``d_i = p``."""
    m = algebra.m
    e = 1
    while p**e < m:
        e += 1
    frob = gf.matpow(frobenius_matrix(algebra, p), e, p)
    return gf.nullspace(frob, p, m)


def quotient_algebra(
    algebra: FiniteRingPresentation, p: int, ideal_basis: list[list[int]]
) -> FiniteRingPresentation | None:
    """Presentation of ``algebra / span(ideal_basis)`` (None for the zero ring).

    The complement basis is the set of standard vectors at the non-pivot
    columns of the ideal's reduced echelon form.
    """
    m = algebra.m
    red, pivots = gf.rref(ideal_basis, p) if ideal_basis else ([], [])
    keep = [c for c in range(m) if c not in pivots]
    if not keep:
        return None

    def reduce(v):
        v = [x % p for x in v]
        for row, pc in zip(red, pivots):
            f = v[pc]
            if f:
                v = [(x - f * y) % p for x, y in zip(v, row)]
        return [v[c] for c in keep]

    gens = [algebra.generator(c) for c in keep]
    l = [[reduce(algebra.mul(a, b)) for b in gens] for a in gens]
    return FiniteRingPresentation.build([p] * len(keep), l)


@dataclass
class LocalTestResult:
    is_local: bool
    p: int | None = None
    nilradical_dim: int | None = None
    residue: FieldTestResult | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.is_local


def local_test(ring: FiniteRingPresentation) -> LocalTestResult:
    p = prime_power_base(ring.d[-1])
    if p is None:
        return LocalTestResult(False, reason=f"d_m = {ring.d[-1]} is not a prime power")
    for dk in ring.d:
        while dk % p == 0:
            dk //= p
        if dk != 1:
            return LocalTestResult(False, p, reason="additive orders involve more than one prime")
    algebra = reduce_mod_p(ring, p)
    if algebra_identity(algebra, p) is None:
        raise InvalidPresentation("presentation has no multiplicative identity")
    nil = nilradical_mod_p(algebra, p)
    residue = quotient_algebra(algebra, p, nil)
    if residue is None:
        raise InvalidPresentation("reduction modulo p is the zero ring")
    ft = field_test(residue)
    return LocalTestResult(ft.is_field, p, len(nil), ft)


def is_local(ring: FiniteRingPresentation) -> bool:
    return local_test(ring).is_local
