"""Select the determinant kernel at import time.

The compiled extension is used when it was built; setting the environment
variable ``PRIMEIDEAL_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

import os

from primeideal.linalg import _kernels_py

if os.environ.get("PRIMEIDEAL_PURE_PYTHON", "") not in ("", "0"):
    kernels = _kernels_py
else:
    try:
        from primeideal.linalg import _kernels as kernels  # type: ignore[attr-defined]
    except ImportError:  # extension not built
        kernels = _kernels_py

BACKEND: str = kernels.BACKEND
fallback = _kernels_py


def det_mod_primes(rows, primes):
    limit = kernels.MAX_MODULUS
    if limit is not None and primes and max(primes) >= limit:
        return fallback.det_mod_primes(rows, primes)
    return kernels.det_mod_primes(rows, primes)
