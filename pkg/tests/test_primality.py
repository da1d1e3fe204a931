import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import isprime

from primeideal import primality
from primeideal.primality import (
    WITNESS_LIMIT,
    aks,
    integer_root,
    is_prime_integer,
    miller_rabin,
    perfect_power,
    prime_power_base,
)


def _sieve(limit):
    flags = bytearray([1]) * limit
    flags[0:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return flags


def test_examples():
    assert is_prime_integer(7)
    assert not is_prime_integer(561)
    assert not is_prime_integer(1) and not is_prime_integer(0)
    assert is_prime_integer(2)


def test_agrees_with_sieve_below_one_million():
    flags = _sieve(10**6)
    assert all(miller_rabin(n) == bool(flags[n]) for n in range(10**6))


def test_aks_agrees_with_sieve_small():
    flags = _sieve(400)
    assert all(aks(n) == bool(flags[n]) for n in range(400))


@pytest.mark.parametrize("n", [10_007, 65_537, 999_983 * 1_000_003, 3_215_031_751])
def test_aks_selected_values(n):
    assert aks(n) == isprime(n)


def test_strong_pseudoprimes_rejected():
    # strong pseudoprimes to many small bases
    for n in (3_215_031_751, 3_825_123_056_546_413_051, 318_665_857_834_031_151_167_461):
        assert not miller_rabin(n)


def test_above_witness_limit():
    p = 2**89 - 1
    assert p > WITNESS_LIMIT
    assert miller_rabin(p)
    assert not miller_rabin(p * (2**61 - 1))
    assert not miller_rabin((2**61 - 1) ** 2)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**128))
def test_agrees_with_sympy(n):
    assert miller_rabin(n) == isprime(n)


def test_backend_switch():
    previous = primality.get_backend()
    try:
        primality.set_backend("aks")
        assert is_prime_integer(101) and not is_prime_integer(91)
    finally:
        primality.set_backend(previous)
    with pytest.raises(ValueError):
        primality.set_backend("coin-flip")


def test_perfect_powers():
    assert perfect_power(2**10) == (2, 10)
    assert perfect_power(36) == (6, 2)
    assert perfect_power(35) is None
    assert integer_root(10**30 + 5, 3) == 10**10
    assert prime_power_base(3**7) == 3
    assert prime_power_base(36) is None
    assert prime_power_base(13) == 13
    assert prime_power_base(1) is None


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 10**4), st.integers(1, 6))
def test_prime_power_base_property(b, e):
    n = b**e
    expected = None
    if isprime(b):
        expected = b
    else:
        pp = perfect_power(b)
        if pp and isprime(pp[0]):
            expected = pp[0]
    assert prime_power_base(n) == expected
