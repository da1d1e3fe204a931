import json
import subprocess
import sys

import pytest

from primeideal.cli import main
from primeideal.fixtures import fixture


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def ideal(a, b, **extra):
    return json.dumps({"alpha": a, "beta": b, **extra})


def test_is_prime_examples(capsys):
    code, out, _ = run(capsys, "is-prime", "--ring", "gaussian", "--ideal", ideal([3, 0], [3, 0]), "--json")
    assert code == 0 and json.loads(out)["kind"] == "Prime"
    code, out, _ = run(capsys, "is-prime", "--ring", "gaussian", "--ideal", ideal([2, 0], [2, 0]), "--json")
    assert code == 1 and json.loads(out)["kind"] == "PrimePowerNotPrime"
    code, out, _ = run(capsys, "is-prime", "--ring", "gaussian", "--ideal", ideal([1, 0], [0, 0]), "--json")
    assert code == 1 and json.loads(out)["kind"] == "UnitIdeal"


def test_is_prime_power_examples(capsys):
    code, out, _ = run(capsys, "is-prime-power", "--ring", "gaussian", "--ideal", ideal([2, 0], [2, 0]), "--json")
    assert code == 0 and json.loads(out)["kind"] == "PrimePowerNotPrime"
    code, out, _ = run(capsys, "is-prime-power", "--ring", "gaussian", "--ideal", ideal([5, 0], [5, 0]), "--json")
    assert code == 1 and json.loads(out)["kind"] == "Composite"
    code, out, _ = run(capsys, "is-prime-power", "--ring", "sqrt_m5", "--ideal", ideal([2, 0], [1, 1]), "--json")
    assert code == 0 and json.loads(out)["kind"] == "Prime"


def test_explicit_h_gives_same_verdict(capsys):
    base = run(capsys, "is-prime", "--ring", "sqrt_m5", "--ideal", ideal([2, 0], [1, 1]), "--json")
    for h in ("24", "48", "240"):
        code, out, _ = run(capsys, "is-prime", "--ring", "sqrt_m5", "--ideal", ideal([2, 0], [1, 1]), "--h", h, "--json")
        assert code == base[0]
        assert json.loads(out)["kind"] == json.loads(base[1])["kind"]
    code, out, _ = run(capsys, "is-prime", "--ring", "sqrt_m5", "--ideal", ideal([2, 0], [1, 1], h="72"), "--json")
    assert json.loads(out)["certificate"]["h"] == "72"


def test_bad_h_is_an_error(capsys):
    code, out, err = run(capsys, "is-prime", "--ring", "gaussian", "--ideal", ideal([3, 0], [0, 0]), "--h", "3")
    assert code == 2 and out == "" and "not a multiple" in err
    code, _, err = run(capsys, "is-prime", "--ring", "gaussian", "--ideal", ideal([3, 0], [0, 0]), "--h", "x")
    assert code == 2 and "decimal" in err


def test_thin_wrappers(capsys):
    code, out, _ = run(capsys, "norm", "--ring", "sqrt_m5", "--ideal", ideal([2, 0], [1, 1]))
    assert code == 0 and out.strip() == "2"
    code, out, _ = run(capsys, "snf", "--matrix", "[[2,4],[-2,6]]", "--json")
    assert json.loads(out)["diagonal"] == ["10", "2"]
    code, out, _ = run(capsys, "hnf", "--matrix", "[[2,4],[-2,6]]", "--json")
    assert json.loads(out)["H"] == [[10, 8], [0, 2]]
    code, out, _ = run(capsys, "validate", "--ring", "gaussian")
    assert code == 0 and out.strip() == "ok"
    code, out, _ = run(capsys, "quotient", "--ring", "gaussian", "--ideal", ideal([5, 0], [5, 0]), "--json")
    assert json.loads(out)["quotient"] == {"m": 2, "d": [5, 5], "l": [[[1, 0], [0, 1]], [[0, 1], [4, 0]]]}


def test_files_and_text_matrix(capsys, tmp_path):
    ring = tmp_path / "ring.json"
    ring.write_text(json.dumps(fixture("eisenstein").to_json()))
    idl = tmp_path / "ideal.json"
    idl.write_text(ideal([2, 0], [0, 0]))
    code, out, _ = run(capsys, "is-prime", "--ring", str(ring), "--ideal", str(idl))
    assert code == 0 and out.startswith("Prime")  # 2 is inert in Z[zeta_3]
    mat = tmp_path / "m.txt"
    mat.write_text("2 4\n-2 6\n")
    code, out, _ = run(capsys, "snf", "--matrix", str(mat))
    assert out.strip() == "diag(10, 2)"


def test_presentation_commands(capsys, tmp_path):
    f4 = json.dumps({"m": 2, "d": [2, 2], "l": [[[1, 0], [0, 1]], [[0, 1], [1, 1]]]})
    code, out, _ = run(capsys, "is-field", "--presentation", f4, "--oracle", "--json")
    data = json.loads(out)
    assert code == 0 and data["tower_degrees"] == [1, 2] and data["oracle"]["agrees"]
    f2f2 = json.dumps({"m": 2, "d": [2, 2], "l": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]]})
    code, out, _ = run(capsys, "is-local", "--presentation", f2f2, "--oracle", "--json")
    assert code == 1 and json.loads(out)["oracle"]["agrees"]
    bad = json.dumps({"m": 2, "d": [2, 4], "l": [[[1, 0], [0, 1]], [[0, 1], [1, 1]]]})
    code, _, err = run(capsys, "is-field", "--presentation", bad)
    assert code == 2 and "divisibility" in err


def test_oracle_cap(capsys):
    code, out, _ = run(capsys, "is-prime", "--ring", "gaussian", "--ideal", ideal([101, 0], [0, 0]), "--oracle", "--cap", "100", "--json")
    rep = json.loads(out)["oracle"]
    assert not rep["checked"]
    code, out, _ = run(capsys, "is-prime", "--ring", "gaussian", "--ideal", ideal([7, 0], [0, 0]), "--oracle", "--json")
    assert code == 0 and json.loads(out)["oracle"] == {"checked": True, "size": 49, "is_field": True, "is_local": True, "agrees": True}


@pytest.mark.parametrize("argv", [
    ["is-prime", "--ring", "nosuch.json", "--ideal", '{"alpha": [1, 0], "beta": [0, 0]}'],
    ["is-prime", "--ring", "gaussian", "--ideal", '{"alpha": [0, 0], "beta": [0, 0]}'],
    ["is-prime", "--ring", "gaussian", "--ideal", '{"alpha": [1, 0, 0], "beta": [0, 0, 0]}'],
    ["is-prime", "--ring", "gaussian", "--ideal", "{not json"],
    ["snf", "--matrix", "[[1,2],[2,4]]"],
])
def test_errors_exit_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err


def test_primality_flag(capsys):
    # x^3 - x - 1 = (x - 2)(x^2 + 2x + 3) mod 5, so (5) is not prime
    code, out, _ = run(capsys, "--primality", "aks", "is-prime", "--ring", "cubic_23", "--ideal", ideal([5, 0, 0], [0, 0, 0]))
    assert code == 1 and out.startswith("Composite")
    code, out, _ = run(capsys, "--primality", "aks", "is-prime", "--ring", "cubic_23", "--ideal", ideal([2, 0, 0], [0, 0, 0]))
    assert code == 0  # x^3 - x - 1 is irreducible mod 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "primeideal", "is-prime", "--ring", "gaussian", "--ideal", ideal([3, 0], [3, 0])],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout.startswith("Prime") and proc.stderr == ""
