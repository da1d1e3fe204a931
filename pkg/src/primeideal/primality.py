"""Deterministic primality testing for arbitrary-precision integers.

Two backends are available:

``"miller-rabin"`` (default)
    Below 3,317,044,064,679,887,385,961,981 the first thirteen primes form a
    verified witness set, so the answer is unconditional there. Above it every
    base up to ``2 (ln n)^2`` is tried, which is deterministic and correct
    under the generalized Riemann hypothesis.
``"aks"``
    The Agrawal-Kayal-Saxena test, unconditional but slow.

The backend is selected with :func:`set_backend` or the
``PRIMEIDEAL_PRIMALITY`` environment variable.
"""

from __future__ import annotations

import math
import os

_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
WITNESS_LIMIT = 3_317_044_064_679_887_385_961_981
BACKENDS = ("miller-rabin", "aks")

_backend = os.environ.get("PRIMEIDEAL_PRIMALITY", "miller-rabin")
if _backend not in BACKENDS:
    _backend = "miller-rabin"


def set_backend(name: str) -> None:
    global _backend
    if name not in BACKENDS:
        raise ValueError(f"unknown primality backend {name!r}; choose from {BACKENDS}")
    _backend = name


def get_backend() -> str:
    return _backend


def _strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def miller_rabin(n: int) -> bool:
    if n < 2:
        return False
    for p in _WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < WITNESS_LIMIT:
        bases = _WITNESSES
    else:
        bases = range(2, min(n - 2, int(2 * math.log(n) ** 2)) + 1)
    return all(_strong_probable_prime(n, a, d, s) for a in bases)


def perfect_power(n: int) -> tuple[int, int] | None:
    """Return ``(r, k)`` with ``r**k == n`` and ``k >= 2`` maximal, or None."""
    if n < 4:
        return None
    for k in range(n.bit_length(), 1, -1):
        r = integer_root(n, k)
        if r ** k == n:
            return r, k
    return None


def integer_root(n: int, k: int) -> int:
    """``floor(n ** (1/k))`` for ``n >= 0``."""
    if n < 2:
        return n
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def _polymul_mod(f: list[int], g: list[int], r: int, n: int) -> list[int]:
    # Kronecker substitution: pack coefficients into one integer per operand.
    width = 2 * n.bit_length() + r.bit_length() + 1
    mask = (1 << width) - 1
    pf = 0
    for c in reversed(f):
        pf = (pf << width) | c
    pg = 0
    for c in reversed(g):
        pg = (pg << width) | c
    prod_ = pf * pg
    out = [0] * r
    i = 0
    while prod_:
        out[i % r] += prod_ & mask
        prod_ >>= width
        i += 1
    return [c % n for c in out]


def _polypow_mod(base: list[int], e: int, r: int, n: int) -> list[int]:
    result = [1] + [0] * (r - 1)
    while e:
        if e & 1:
            result = _polymul_mod(result, base, r, n)
        base = _polymul_mod(base, base, r, n)
        e >>= 1
    return result


def _multiplicative_order(n: int, r: int) -> int:
    k, x = 1, n % r
    while x != 1:
        x = x * n % r
        k += 1
    return k


def aks(n: int) -> bool:
    if n < 2:
        return False
    if perfect_power(n):
        return False
    log2n = math.log2(n)
    bound = math.floor(log2n ** 2)
    r = 2
    while True:
        if math.gcd(n, r) == 1 and _multiplicative_order(n, r) > bound:
            break
        r += 1
    for a in range(2, min(r, n - 1) + 1):
        if n % a == 0:
            return False
    if n <= r:
        return True
    phi = sum(1 for k in range(1, r) if math.gcd(k, r) == 1)
    limit = math.floor(math.sqrt(phi) * log2n)
    xn = [0] * r
    xn[n % r] = 1
    for a in range(1, limit + 1):
        lhs = _polypow_mod([a % n, 1] + [0] * (r - 2), n, r, n)
        rhs = xn[:]
        rhs[0] = (rhs[0] + a) % n
        if lhs != rhs:
            return False
    return True


def is_prime_integer(n: int) -> bool:
    """True iff ``n`` is prime, using the configured deterministic backend."""
    if n < 2:
        return False
    if _backend == "aks":
        return aks(n)
    return miller_rabin(n)


def prime_power_base(n: int) -> int | None:
    """Return ``p`` if ``n = p^e`` for a prime ``p`` and ``e >= 1``, else None."""
    if is_prime_integer(n):
        return n
    pp = perfect_power(n)
    while pp is not None:
        r, _ = pp
        if is_prime_integer(r):
            return r
        pp = perfect_power(r)
    return None
