"""Exact integer linear algebra: CRT determinants, HNF, SNF, modular inverses."""

from primeideal.linalg._backend import BACKEND
from primeideal.linalg.det import det_bareiss, det_modular, hadamard_bound, prime_stream
from primeideal.linalg.hnf import HnfResult, hnf_modular, hnf_with_transform, is_hnf, xgcd
from primeideal.linalg.matrix import IntMatrix
from primeideal.linalg.modinv import inverse_mod
from primeideal.linalg.snf import SnfResult, snf_modular_diagonal, snf_with_transforms

__all__ = [
    "BACKEND",
    "HnfResult",
    "IntMatrix",
    "SnfResult",
    "det_bareiss",
    "det_modular",
    "hadamard_bound",
    "hnf_modular",
    "hnf_with_transform",
    "inverse_mod",
    "is_hnf",
    "prime_stream",
    "snf_modular_diagonal",
    "snf_with_transforms",
    "xgcd",
]
