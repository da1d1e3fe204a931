"""Finite commutative rings in basis representation; field and local tests."""

from primeideal.finite_ring.field_test import (
    FieldTestResult,
    check_prime_equal_d,
    field_test,
    is_field,
    minimal_polynomial_first,
    minimal_polynomial_tower,
)
from primeideal.finite_ring.fields import PrimeField, TowerField, irreducible_over_field
from primeideal.finite_ring.local import LocalTestResult, is_local, local_test, nilradical_mod_p
from primeideal.finite_ring.presentation import (
    FiniteRingPresentation,
    ring_add,
    ring_mul,
    ring_pow,
)

__all__ = [
    "FieldTestResult",
    "FiniteRingPresentation",
    "LocalTestResult",
    "PrimeField",
    "TowerField",
    "check_prime_equal_d",
    "field_test",
    "irreducible_over_field",
    "is_field",
    "is_local",
    "local_test",
    "minimal_polynomial_first",
    "minimal_polynomial_tower",
    "nilradical_mod_p",
    "ring_add",
    "ring_mul",
    "ring_pow",
]
