import os
import random
import subprocess
import sys

import pytest

from primeideal.linalg import _backend, _kernels_py, det_bareiss
from primeideal.linalg.det import first_primes

try:
    from primeideal.linalg import _kernels as compiled
except ImportError:  # extension not built
    compiled = None

needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled extension not built")


@needs_compiled
def test_compiled_selected_by_default():
    if os.environ.get("PRIMEIDEAL_PURE_PYTHON", "") in ("", "0"):
        assert _backend.BACKEND == "cython"


@needs_compiled
def test_compiled_matches_fallback():
    rng = random.Random(0)
    primes = first_primes(4) + [2, 3, 65521]
    for _ in range(200):
        n = rng.randint(1, 12)
        rows = [[rng.randint(-(2**62), 2**62) for _ in range(n)] for _ in range(n)]
        if rng.random() < 0.2:
            rows[-1] = list(rows[0])  # singular
        assert compiled.det_mod_primes(rows, primes) == _kernels_py.det_mod_primes(rows, primes)


@needs_compiled
def test_compiled_handles_huge_entries():
    # entries beyond 64 bits must be reduced before entering C
    rows = [[2**200 + 1, 3], [5, 2**100]]
    p = first_primes(1)[0]
    assert compiled.det_mod_primes(rows, [p]) == [det_bareiss(rows) % p]


def test_backend_falls_back_for_large_moduli():
    rows = [[3, 1], [4, 2]]
    assert _backend.det_mod_primes(rows, [2**61 - 1]) == [2]


def test_environment_forces_fallback():
    env = dict(os.environ, PRIMEIDEAL_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from primeideal.linalg import BACKEND; print(BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
