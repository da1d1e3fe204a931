"""Basis representation of the quotient ring ``O / I``.

With ``H_M`` the HNF basis of ``I`` and ``S = V H_M U`` its Smith form, the
elements ``eta = w V^-1`` give ``O = sum Z eta_i`` and ``I = sum Z d_i eta_i``.
Structure constants of ``O/I`` on the cosets of ``eta_i`` are computed
entirely modulo ``h`` from ``V`` and ``V^-1 mod h``, then reduced modulo
each ``d_k``.
"""

from __future__ import annotations

from dataclasses import dataclass

from primeideal.finite_ring.presentation import FiniteRingPresentation
from primeideal.linalg import IntMatrix, inverse_mod, snf_with_transforms
from primeideal.linalg.matrix import matmul_mod, transpose
from primeideal.order import OrderPresentation, TwoGenIdeal, ideal_hnf_basis, norm_multiple


@dataclass(frozen=True)
class UnitIdeal:
    norm: int = 1


@dataclass(frozen=True)
class QuotientCertificate:
    """``V H_M U = S``; ``v_inv_mod_h`` holds the coordinates of the
    ``eta_i`` (as columns) modulo ``h``."""

    H_M: IntMatrix
    S: tuple[int, ...]
    U: IntMatrix
    V: IntMatrix
    v_inv_mod_h: IntMatrix
    h: int
    norm: int
    one_image: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "norm": str(self.norm),
            "h": str(self.h),
            "snf_diagonal": [str(x) for x in self.S],
            "hnf_basis": self.H_M.to_rows(),
            "V": self.V.to_rows(),
            "U": self.U.to_rows(),
        }


@dataclass(frozen=True)
class Quotient:
    ring: FiniteRingPresentation
    certificate: QuotientCertificate


def output_basis(order: OrderPresentation, ideal: TwoGenIdeal, h: int | None = None) -> UnitIdeal | Quotient:
    """Either :class:`UnitIdeal` or a basis representation of ``O/I``.

    Args:
        h: positive multiple of ``N(alpha)`` and ``N(beta)``; defaults to
            their product.
    """
    if h is None:
        h = norm_multiple(order, ideal)
    hm, norm = ideal_hnf_basis(order, ideal, h)
    if norm == 1:
        return UnitIdeal()
    snf = snf_with_transforms(hm)
    d = snf.invariants
    n = order.n
    v_mod = [[x % h for x in row] for row in snf.V.to_rows()]
    w = inverse_mod(snf.V, h).to_rows()
    wt = transpose(w)
    # a[k][i][j]: coordinate k (w-basis) of eta_i eta_j, modulo h
    a = []
    for k in range(n):
        ck = [[order.table[i][j][k] for j in range(n)] for i in range(n)]
        a.append(matmul_mod(matmul_mod(wt, ck, h), w, h))
    keep = [i for i in range(n) if d[i] > 1]
    l = []
    for i in keep:
        row = []
        for j in keep:
            aij = [a[k][i][j] for k in range(n)]
            tij = [sum(v * x for v, x in zip(v_mod[r], aij)) % h for r in range(n)]
            row.append([tij[k] % d[k] for k in keep])
        l.append(row)
    ring = FiniteRingPresentation.build([d[k] for k in keep], l)
    one = [sum(v * x for v, x in zip(v_mod[r], order.one)) % d[r] for r in keep]
    cert = QuotientCertificate(hm, tuple(d), snf.U, snf.V, IntMatrix.from_rows(w), h, norm, tuple(one))
    return Quotient(ring, cert)
