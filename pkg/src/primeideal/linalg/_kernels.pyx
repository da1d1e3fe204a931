# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled determinant-modulo-prime kernel.

Moduli must be below 2**31 so that products of reduced residues fit in a
signed 64-bit integer.
"""

from libc.stdlib cimport malloc, free

BACKEND = "cython"
MAX_MODULUS = 2 ** 31


cdef long long _inv_mod(long long a, long long p) nogil:
    cdef long long t = 0, new_t = 1, r = p, new_r = a, q, tmp
    while new_r != 0:
        q = r // new_r
        tmp = t - q * new_t
        t = new_t
        new_t = tmp
        tmp = r - q * new_r
        r = new_r
        new_r = tmp
    if t < 0:
        t += p
    return t


cdef long long _det_buffer(long long *a, int n, long long p) nogil:
    cdef int i, j, k, piv
    cdef long long det = 1, inv, f, tmp
    for k in range(n):
        piv = -1
        for i in range(k, n):
            if a[i * n + k] != 0:
                piv = i
                break
        if piv < 0:
            return 0
        if piv != k:
            for j in range(k, n):
                tmp = a[k * n + j]
                a[k * n + j] = a[piv * n + j]
                a[piv * n + j] = tmp
            det = p - det if det != 0 else 0
        det = det * a[k * n + k] % p
        inv = _inv_mod(a[k * n + k], p)
        for i in range(k + 1, n):
            if a[i * n + k] == 0:
                continue
            f = a[i * n + k] * inv % p
            for j in range(k, n):
                a[i * n + j] = (a[i * n + j] - f * a[k * n + j]) % p
                if a[i * n + j] < 0:
                    a[i * n + j] += p
    return det


def det_mod_primes(rows, primes):
    """Return ``[det(rows) mod p for p in primes]``."""
    cdef int n = len(rows)
    cdef int i, j
    cdef long long p
    cdef long long *buf = <long long *> malloc(n * n * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    out = []
    try:
        for prime in primes:
            if prime >= MAX_MODULUS:
                raise ValueError("modulus too large for the compiled kernel")
            p = prime
            for i in range(n):
                row = rows[i]
                for j in range(n):
                    buf[i * n + j] = row[j] % prime
            out.append(_det_buffer(buf, n, p))
    finally:
        free(buf)
    return out
