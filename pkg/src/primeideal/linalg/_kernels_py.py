"""Pure-Python twin of the compiled kernel in ``_kernels.pyx``."""

BACKEND = "python"
MAX_MODULUS = None


def _det_mod_p(rows, p):
    n = len(rows)
    a = [[x % p for x in r] for r in rows]
    det = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        pivot_row = a[k]
        det = det * pivot_row[k] % p
        inv = pow(pivot_row[k], -1, p)
        for i in range(k + 1, n):
            row = a[i]
            if row[k]:
                f = row[k] * inv % p
                a[i] = [(x - f * y) % p for x, y in zip(row, pivot_row)]
    return det % p


def det_mod_primes(rows, primes):
    """Return ``[det(rows) mod p for p in primes]``."""
    return [_det_mod_p(rows, p) for p in primes]
