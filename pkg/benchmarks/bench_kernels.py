"""Compare the compiled determinant kernel with its pure-Python twin.

    python3 benchmarks/bench_kernels.py [--sizes 10 25 50] [--repeat 3]
"""

from __future__ import annotations

import argparse
import random
import timeit

from primeideal.linalg import _kernels_py, det_modular
from primeideal.linalg.det import _primes_exceeding, hadamard_bound

try:
    from primeideal.linalg import _kernels as compiled
except ImportError:
    compiled = None


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--sizes", type=int, nargs="+", default=[10, 25, 50, 80])
    parser.add_argument("--bits", type=int, default=32)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if compiled is None:
        raise SystemExit("compiled kernel not built; run `pip install -e . --no-build-isolation` first")

    rng = random.Random(0)
    lim = 2 ** (args.bits - 1)
    print(f"{'n':>4} {'primes':>7} {'python (s)':>11} {'cython (s)':>11} {'speedup':>8} {'det_modular (s)':>16}")
    for n in args.sizes:
        rows = [[rng.randint(-lim, lim - 1) for _ in range(n)] for _ in range(n)]
        primes = _primes_exceeding(2 * hadamard_bound(rows) + 1)
        t_py = min(timeit.repeat(lambda: _kernels_py.det_mod_primes(rows, primes), number=1, repeat=args.repeat))
        t_c = min(timeit.repeat(lambda: compiled.det_mod_primes(rows, primes), number=1, repeat=args.repeat))
        assert _kernels_py.det_mod_primes(rows, primes) == compiled.det_mod_primes(rows, primes)
        t_full = min(timeit.repeat(lambda: det_modular(rows), number=1, repeat=args.repeat))
        print(f"{n:>4} {len(primes):>7} {t_py:>11.4f} {t_c:>11.4f} {t_py / t_c:>7.1f}x {t_full:>16.4f}")


if __name__ == "__main__":
    main()
