"""Command-line interface.

Exit status: 0 when the answer is true (or the command succeeded), 1 when
it is false, 2 on any error. Results go to stdout; diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Callable, Sequence

from primeideal import primality
from primeideal.errors import CapExceeded, PrimeIdealError
from primeideal.finite_ring import FiniteRingPresentation, field_test, local_test
from primeideal.fixtures import POLYNOMIALS, fixture
from primeideal.linalg import IntMatrix, hnf_modular, hnf_with_transform, snf_with_transforms
from primeideal.oracle import (
    DEFAULT_CAP,
    enumerate_presentation,
    enumerate_quotient,
    oracle_is_field,
    oracle_is_local,
)
from primeideal.order import (
    OrderPresentation,
    TwoGenIdeal,
    ideal_hnf_basis,
    norm_multiple,
    validate_order,
)
from primeideal.pipeline import VerdictKind, classify
from primeideal.quotient import UnitIdeal, output_basis

EXIT_TRUE, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _read_json(source: str) -> Any:
    """``source`` is either inline JSON or a path to a JSON file."""
    text = source if source.lstrip().startswith(("{", "[")) else Path(source).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"cannot parse JSON from {source!r}: {exc}") from exc


def load_ring(source: str) -> OrderPresentation:
    if source in POLYNOMIALS and not Path(source).exists():
        return fixture(source)
    return OrderPresentation.from_json(_read_json(source))


def load_ideal(source: str) -> tuple[TwoGenIdeal, int | None]:
    data = _read_json(source)
    if not isinstance(data, dict) or "alpha" not in data or "beta" not in data:
        raise UsageError("ideal must be a JSON object with 'alpha' and 'beta'")
    h = _parse_h(data["h"]) if "h" in data else None
    return TwoGenIdeal.from_json(data), h


def load_matrix(source: str) -> IntMatrix:
    """JSON list of rows, or plain text with one whitespace-separated row per line."""
    stripped = source.lstrip()
    if stripped.startswith("["):
        return IntMatrix.from_rows(json.loads(stripped))
    text = Path(source).read_text()
    if text.lstrip().startswith("["):
        return IntMatrix.from_rows(json.loads(text))
    return IntMatrix.parse(text)


def _parse_h(value: Any) -> int:
    try:
        h = int(str(value).strip())
    except ValueError as exc:
        raise UsageError(f"h must be a decimal integer, got {value!r}") from exc
    if h <= 0:
        raise UsageError("h must be positive")
    return h


def _ring_and_ideal(args) -> tuple[OrderPresentation, TwoGenIdeal, int | None]:
    order = load_ring(args.ring)
    ideal, h = load_ideal(args.ideal)
    if len(ideal.alpha) != order.n:
        raise UsageError(f"ideal generators have length {len(ideal.alpha)}, ring has rank {order.n}")
    if args.h is not None:
        h = _parse_h(args.h)
    return order, ideal, h


def _oracle_report(enumerate_fn: Callable[[], Any], **claims: bool) -> dict:
    """Enumerate the ring and compare each claimed property with brute force."""
    try:
        e = enumerate_fn()
    except CapExceeded as exc:
        return {"checked": False, "reason": str(exc)}
    checks = {"is_field": oracle_is_field, "is_local": oracle_is_local}
    found = {k: e.size > 1 and checks[k](e) for k in claims}
    return {"checked": True, "size": e.size, **found, "agrees": found == claims}


# -- commands -----------------------------------------------------------------


def cmd_validate(args) -> tuple[dict, int]:
    report = validate_order(load_ring(args.ring))
    return report.to_json(), EXIT_TRUE if report.ok else EXIT_FALSE


def cmd_norm(args) -> tuple[dict, int]:
    order, ideal, h = _ring_and_ideal(args)
    if h is None:
        h = norm_multiple(order, ideal)
    hm, norm = ideal_hnf_basis(order, ideal, h)
    return {"norm": str(norm), "h": str(h), "hnf_basis": hm.to_rows()}, EXIT_TRUE


def cmd_hnf(args) -> tuple[dict, int]:
    a = load_matrix(args.matrix)
    if args.h is not None:
        h = hnf_modular(a, _parse_h(args.h))
        return {"H": h.to_rows()}, EXIT_TRUE
    res = hnf_with_transform(a)
    return {"H": res.H.to_rows(), "U": res.U.to_rows()}, EXIT_TRUE


def cmd_snf(args) -> tuple[dict, int]:
    res = snf_with_transforms(load_matrix(args.matrix))
    out = {"diagonal": [str(x) for x in res.invariants], "S": res.S.to_rows(), "U": res.U.to_rows(), "V": res.V.to_rows()}
    return out, EXIT_TRUE


def cmd_quotient(args) -> tuple[dict, int]:
    order, ideal, h = _ring_and_ideal(args)
    q = output_basis(order, ideal, h)
    if isinstance(q, UnitIdeal):
        return {"kind": VerdictKind.UNIT_IDEAL.value, "norm": "1"}, EXIT_TRUE
    out = {"quotient": q.ring.to_json(), "one": list(q.certificate.one_image), "certificate": q.certificate.to_json()}
    return out, EXIT_TRUE


def _ideal_question(question: str):
    def run(args) -> tuple[dict, int]:
        order, ideal, h = _ring_and_ideal(args)
        verdict = classify(order, ideal, h, question=question)
        out = verdict.to_json()
        if args.oracle:
            local = verdict.kind in (VerdictKind.PRIME, VerdictKind.PRIME_POWER_NOT_PRIME)
            field = verdict.kind is VerdictKind.PRIME
            out["oracle"] = _oracle_report(
                lambda: enumerate_quotient(order, ideal, args.cap), is_field=field, is_local=local
            )
        return out, EXIT_TRUE if verdict.predicate else EXIT_FALSE

    return run


def cmd_is_field(args) -> tuple[dict, int]:
    ring = FiniteRingPresentation.from_json(_read_json(args.presentation))
    res = field_test(ring)
    out: dict = {"result": res.is_field}
    if res.is_field:
        out["tower_degrees"] = res.degrees
    if res.reason:
        out["reason"] = res.reason
    if args.oracle:
        out["oracle"] = _oracle_report(lambda: enumerate_presentation(ring, args.cap), is_field=res.is_field)
    return out, EXIT_TRUE if res.is_field else EXIT_FALSE


def cmd_is_local(args) -> tuple[dict, int]:
    ring = FiniteRingPresentation.from_json(_read_json(args.presentation))
    res = local_test(ring)
    out: dict = {"result": res.is_local}
    if res.p is not None:
        out["p"] = str(res.p)
    if res.nilradical_dim is not None:
        out["nilradical_dim"] = res.nilradical_dim
    if res.reason:
        out["reason"] = res.reason
    if args.oracle:
        out["oracle"] = _oracle_report(lambda: enumerate_presentation(ring, args.cap), is_local=res.is_local)
    return out, EXIT_TRUE if res.is_local else EXIT_FALSE


# -- output -------------------------------------------------------------------


def _render_text(cmd: str, out: dict) -> str:
    if "kind" in out:
        lines = [f"{out['kind']} (norm {out['norm']})"]
        if "d" in out:
            lines.append("d = (" + ", ".join(out["d"]) + ")")
        if out.get("tower_degrees"):
            lines.append("tower degrees = " + str(out["tower_degrees"]))
    elif "result" in out:
        lines = [str(out["result"]).lower()]
        if "reason" in out:
            lines.append(out["reason"])
    elif cmd == "validate":
        lines = ["ok"] if out["ok"] else [f"{v['kind']} fails at {tuple(v['indices'])}" for v in out["violations"]]
    elif cmd == "norm":
        lines = [out["norm"]]
    elif cmd == "snf":
        lines = ["diag(" + ", ".join(out["diagonal"]) + ")"]
    elif cmd == "hnf":
        lines = [" ".join(str(x) for x in row) for row in out["H"]]
    else:
        lines = [json.dumps(out, indent=2)]
    if "oracle" in out:
        rep = out["oracle"]
        lines.append(f"oracle: {'agrees' if rep.get('agrees') else 'DISAGREES'}" if rep["checked"] else f"oracle skipped: {rep['reason']}")
    return "\n".join(lines)


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="primeideal", description="Prime and prime-power tests for ideals of finite-rank orders.")
    parser.add_argument("--primality", choices=primality.BACKENDS, help="integer primality backend")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")

    ring = argparse.ArgumentParser(add_help=False)
    ring.add_argument("--ring", required=True, help="order JSON file, inline JSON, or fixture name (" + ", ".join(POLYNOMIALS) + ")")

    ideal = argparse.ArgumentParser(add_help=False)
    ideal.add_argument("--ideal", required=True, help='JSON file or inline JSON {"alpha": [...], "beta": [...], "h": "..."}')
    ideal.add_argument("--h", help="positive multiple of N(alpha) and N(beta), in decimal")

    oracle = argparse.ArgumentParser(add_help=False)
    oracle.add_argument("--oracle", action="store_true", help="cross-check against brute-force enumeration")
    oracle.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest ring the oracle enumerates (default %(default)s)")

    pres = argparse.ArgumentParser(add_help=False)
    pres.add_argument("--presentation", required=True, help='basis representation JSON {"m", "d", "l"} (file or inline)')

    mat = argparse.ArgumentParser(add_help=False)
    mat.add_argument("--matrix", required=True, help="integer matrix: JSON rows, or a text file of rows")

    sub = parser.add_subparsers(dest="command", required=True)
    specs: list[tuple[str, list, Callable, str]] = [
        ("validate", [ring], cmd_validate, "check ring axioms of a multiplication table"),
        ("norm", [ring, ideal], cmd_norm, "norm and HNF basis of an ideal"),
        ("hnf", [mat], cmd_hnf, "Hermite normal form (modulo --h when given)"),
        ("snf", [mat], cmd_snf, "Smith normal form with transforms"),
        ("quotient", [ring, ideal], cmd_quotient, "basis representation of O/I"),
        ("is-prime", [ring, ideal, oracle], _ideal_question("prime"), "is the ideal prime"),
        ("is-prime-power", [ring, ideal, oracle], _ideal_question("prime-power"), "is the ideal a prime power"),
        ("is-field", [pres, oracle], cmd_is_field, "is a basis-represented ring a field"),
        ("is-local", [pres, oracle], cmd_is_local, "is a basis-represented ring local"),
    ]
    for name, parents, fn, help_text in specs:
        p = sub.add_parser(name, parents=[common, *parents], help=help_text)
        if name == "hnf":
            p.add_argument("--h", help="multiple of the lattice determinant; selects the modular algorithm")
        p.set_defaults(func=fn)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    previous = primality.get_backend()
    if args.primality:
        primality.set_backend(args.primality)
    try:
        out, code = args.func(args)
    except (PrimeIdealError, UsageError, ValueError, KeyError, OSError) as exc:
        print(f"primeideal {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    finally:
        primality.set_backend(previous)
    print(json.dumps(out) if args.json else _render_text(args.command, out))
    return code


if __name__ == "__main__":
    sys.exit(main())
