"""Exact determinants via residues modulo word-size primes and CRT."""

from __future__ import annotations

from functools import lru_cache
from itertools import islice
from math import isqrt, prod
from typing import Iterator, Sequence

from primeideal.errors import DimensionError
from primeideal.linalg import _backend
from primeideal.linalg.matrix import IntMatrix, Rows, as_rows

# Residues are taken modulo primes just above this value; the compiled kernel
# needs every modulus below 2**31.
PRIME_STREAM_START = 2**30
_SEGMENT = 1 << 16


def _square(a: IntMatrix | Sequence[Sequence[int]]) -> Rows:
    rows = as_rows(a)
    if len(rows) != len(rows[0]):
        raise DimensionError(f"expected a square matrix, got {len(rows)}x{len(rows[0])}")
    return rows


def hadamard_bound(a: IntMatrix | Sequence[Sequence[int]]) -> int:
    """Ceiling of the product of the Euclidean row norms; at least ``|det a|``."""
    rows = _square(a)
    sq = prod(sum(x * x for x in r) for r in rows)
    if sq == 0:
        return 0
    r = isqrt(sq)
    return r if r * r == sq else r + 1


@lru_cache(maxsize=8)
def _base_primes(limit: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytes(len(range(i * i, limit + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def prime_stream(start: int = PRIME_STREAM_START) -> Iterator[int]:
    """Yield the primes ``>= start`` in increasing order (segmented sieve)."""
    lo = max(start, 2)
    while True:
        hi = lo + _SEGMENT
        base = _base_primes(isqrt(hi) + 1)
        seg = bytearray([1]) * (hi - lo)
        for p in base:
            first = max(p * p, (lo + p - 1) // p * p)
            if first >= hi:
                continue
            seg[first - lo::p] = bytes(len(range(first - lo, hi - lo, p)))
        for off, flag in enumerate(seg):
            if flag and lo + off >= 2:
                yield lo + off
        lo = hi


_stream_cache: list[int] = []
_stream_iter = prime_stream()


def _primes_exceeding(target: int) -> list[int]:
    """Shortest prefix of the default prime stream whose product exceeds ``target``."""
    out: list[int] = []
    modulus = 1
    k = 0
    while modulus <= target:
        if k == len(_stream_cache):
            _stream_cache.append(next(_stream_iter))
        p = _stream_cache[k]
        out.append(p)
        modulus *= p
        k += 1
    return out


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    """Combine ``x = r1 mod m1`` and ``x = r2 mod m2`` for coprime moduli."""
    t = (r2 - r1) * pow(m1, -1, m2) % m2
    return r1 + m1 * t, m1 * m2


def det_modular(a: IntMatrix | Sequence[Sequence[int]]) -> int:
    """Signed determinant from residues modulo a prime stream.

    Primes are consumed until their product exceeds ``2 * hadamard_bound + 1``;
    the symmetric residue of the CRT fold is the determinant.
    """
    rows = _square(a)
    bound = hadamard_bound(rows)
    if bound == 0:
        return 0
    primes = _primes_exceeding(2 * bound + 1)
    residues = _backend.det_mod_primes(rows, primes)
    r, m = 0, 1
    for res, p in zip(residues, primes):
        r, m = crt_pair(r, m, res, p)
    r %= m
    return r - m if r > m // 2 else r


def first_primes(count: int, start: int = PRIME_STREAM_START) -> list[int]:
    return list(islice(prime_stream(start), count))


def det_bareiss(a: IntMatrix | Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination; independent check for :func:`det_modular`."""
    m = _square(a)
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
