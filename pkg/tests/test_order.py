import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primeideal.errors import DimensionError, NotADomain
from primeideal.fixtures import POLYNOMIALS, all_fixtures, fixture, power_basis_order
from primeideal.order import (
    OrderPresentation,
    TwoGenIdeal,
    element_norm,
    ideal_hnf_basis,
    ideal_product,
    lemma_bound,
    norm_multiple,
    regular_representation,
    validate_order,
)
from primeideal.oracle import enumerate_quotient

from _support import random_ideal, rngs

FIXTURES = all_fixtures()


@pytest.mark.parametrize("name", list(POLYNOMIALS))
def test_fixtures_validate(name):
    order = FIXTURES[name]
    assert validate_order(order).ok
    assert order == power_basis_order(POLYNOMIALS[name])


def test_gaussian_table():
    zi = fixture("gaussian")
    assert zi.mul((0, 1), (0, 1)) == (-1, 0)
    assert zi.to_json() == {"rank": 2, "one": [1, 0], "table": [[[1, 0], [0, 1]], [[0, 1], [-1, 0]]]}
    assert OrderPresentation.from_json(zi.to_json()) == zi


def test_validate_reports_broken_table():
    bad = OrderPresentation.build([[[1, 0], [0, 1]], [[1, 1], [0, 0]]], [1, 0])
    report = validate_order(bad)
    assert not report.ok
    assert ("commutativity", (0, 1)) in report.violations
    assert report.to_json()["violations"][0]["indices"] == [1, 2]


def test_norm_examples():
    zi = fixture("gaussian")
    assert element_norm(zi, (1, 1)) == 2
    assert element_norm(zi, (3, 4)) == 25
    s5 = fixture("sqrt_m5")
    assert element_norm(s5, (1, 1)) == 6
    ideal = TwoGenIdeal.of((2, 0), (1, 1))
    assert norm_multiple(s5, ideal) == 24
    hm, norm = ideal_hnf_basis(s5, ideal)
    assert norm == 2 and hm.to_rows() == [[2, 1], [0, 1]]


def test_regular_representation_rows():
    zi = fixture("gaussian")
    # x = 2 + 3i: x*1 = 2 + 3i, x*i = -3 + 2i
    assert regular_representation(zi, (2, 3)).to_rows() == [[2, 3], [-3, 2]]


def test_zero_ideal_and_bad_lengths():
    with pytest.raises(ValueError):
        TwoGenIdeal.of((0, 0), (0, 0))
    with pytest.raises(DimensionError):
        TwoGenIdeal.of((1, 0), (1,))


def test_not_a_domain():
    # Z x Z: (1, 0) is a zero divisor
    split = OrderPresentation.build([[[1, 0], [0, 0]], [[0, 0], [0, 1]]], [1, 1])
    with pytest.raises(NotADomain):
        norm_multiple(split, TwoGenIdeal.of((1, 0), (0, 0)))


def test_wrong_h_rejected():
    zi = fixture("gaussian")
    with pytest.raises(ValueError):
        ideal_hnf_basis(zi, TwoGenIdeal.of((3, 0), (0, 0)), h=3)
    with pytest.raises(ValueError):
        ideal_hnf_basis(zi, TwoGenIdeal.of((3, 0), (0, 0)), h=0)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(list(POLYNOMIALS)), rngs)
def test_norm_is_quotient_size(name, rnd):
    order = FIXTURES[name]
    ideal = random_ideal(rnd, order, 5)
    _, norm = ideal_hnf_basis(order, ideal)
    assert enumerate_quotient(order, ideal, cap=10**6).size == norm


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(list(POLYNOMIALS)), rngs)
def test_principal_norm_equals_element_norm(name, rnd):
    order = FIXTURES[name]
    x = [rnd.randint(-9, 9) for _ in range(order.n)]
    if not any(x):
        return
    _, norm = ideal_hnf_basis(order, TwoGenIdeal.of(x, [0] * order.n))
    assert norm == element_norm(order, x)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(list(POLYNOMIALS)), rngs)
def test_norm_multiplicative(name, rnd):
    order = FIXTURES[name]
    i1, i2 = random_ideal(rnd, order, 8), random_ideal(rnd, order, 8)
    _, n1 = ideal_hnf_basis(order, i1)
    _, n2 = ideal_hnf_basis(order, i2)
    assert ideal_product(order, i1, i2)[1] == n1 * n2


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(list(POLYNOMIALS)), rngs)
def test_norm_multiple_bounds(name, rnd):
    order = FIXTURES[name]
    ideal = random_ideal(rnd, order, 20)
    h = norm_multiple(order, ideal)
    _, norm = ideal_hnf_basis(order, ideal, h)
    assert 0 < h <= lemma_bound(order, ideal)
    assert h % norm == 0


def test_ideal_hnf_independent_of_h():
    zi = fixture("gaussian")
    rng = random.Random(3)
    for _ in range(50):
        ideal = random_ideal(rng, zi, 30)
        h = norm_multiple(zi, ideal)
        assert ideal_hnf_basis(zi, ideal, h) == ideal_hnf_basis(zi, ideal, 7 * h)
