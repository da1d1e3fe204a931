"""Prime and prime-power tests for ideals, with verdicts for reporting."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from primeideal.finite_ring import FieldTestResult, field_test, local_test
from primeideal.finite_ring.presentation import FiniteRingPresentation
from primeideal.order import OrderPresentation, TwoGenIdeal
from primeideal.quotient import Quotient, QuotientCertificate, output_basis


class VerdictKind(str, Enum):
    UNIT_IDEAL = "UnitIdeal"
    PRIME = "Prime"
    PRIME_POWER_NOT_PRIME = "PrimePowerNotPrime"
    COMPOSITE = "Composite"


@dataclass
class Verdict:
    kind: VerdictKind
    norm: int
    predicate: bool
    quotient: FiniteRingPresentation | None = None
    certificate: QuotientCertificate | None = None
    tower_degrees: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind.value, "result": self.predicate, "norm": str(self.norm)}
        if self.quotient is not None:
            out["quotient"] = self.quotient.to_json()
            out["d"] = [str(x) for x in self.quotient.d]
        if self.tower_degrees:
            out["tower_degrees"] = self.tower_degrees
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


def _quotient(order: OrderPresentation, ideal: TwoGenIdeal, h: int | None) -> Quotient | None:
    q = output_basis(order, ideal, h)
    return q if isinstance(q, Quotient) else None


def is_prime_ideal(order: OrderPresentation, ideal: TwoGenIdeal, h: int | None = None) -> bool:
    q = _quotient(order, ideal, h)
    return q is not None and field_test(q.ring).is_field


def is_prime_ideal_power(order: OrderPresentation, ideal: TwoGenIdeal, h: int | None = None) -> bool:
    q = _quotient(order, ideal, h)
    return q is not None and local_test(q.ring).is_local


def classify(order: OrderPresentation, ideal: TwoGenIdeal, h: int | None = None, *, question: str = "prime") -> Verdict:
    """Full verdict; ``question`` is ``"prime"`` or ``"prime-power"`` and
    decides which test runs first and what ``predicate`` reports."""
    if question not in ("prime", "prime-power"):
        raise ValueError(f"unknown question {question!r}")
    q = _quotient(order, ideal, h)
    if q is None:
        return Verdict(VerdictKind.UNIT_IDEAL, 1, False)
    ring = q.ring
    if question == "prime":
        ft = field_test(ring)
        local = True if ft.is_field else local_test(ring).is_local
    else:
        local = local_test(ring).is_local
        ft = field_test(ring) if local else FieldTestResult(False)
    if ft.is_field:
        kind = VerdictKind.PRIME
    elif local:
        kind = VerdictKind.PRIME_POWER_NOT_PRIME
    else:
        kind = VerdictKind.COMPOSITE
    predicate = ft.is_field if question == "prime" else local
    degrees = ft.degrees if ft.is_field else []
    return Verdict(kind, q.certificate.norm, predicate, ring, q.certificate, degrees)
