import math

import pytest
from hypothesis import given, strategies as st

from torustwist import (DomainError, TorusKnotParams, corollary_bound,
                        sigma_2nr_closed, sigma_closed, sigma_oracle,
                        sigma_p_plus_4, sigma_p_plus_r)


def K(p, q):
    return TorusKnotParams(p, q)


def coprime_range(pmax, qmax):
    return [(p, q) for p in range(2, pmax + 1) for q in range(p + 1, qmax + 1)
            if math.gcd(p, q) == 1]


@pytest.mark.parametrize("p, q, value", [
    (2, 3, -2),   # one column of lattice points, both on the minus side
    (1, 5, 0),
    (5, 8, -20),
    (3, 7, -8),
])
def test_oracle_values(p, q, value):
    assert sigma_oracle(K(p, q)) == value


@pytest.mark.parametrize("p, q, value", [
    (5, 7, -16),
    (5, 8, -20),
    (2, 3, -2),
    (1, 5, 0),
])
def test_closed_values(p, q, value):
    assert sigma_closed(K(p, q)) == value


def test_closed_equals_oracle():
    for p, q in coprime_range(12, 20):
        assert sigma_closed(K(p, q)) == sigma_oracle(K(p, q))


def test_signature_even_and_bounded():
    for p, q in coprime_range(12, 20):
        s = sigma_closed(K(p, q))
        assert s % 2 == 0
        assert s <= corollary_bound(K(p, q))


@pytest.mark.parametrize("p, r, value", [
    (5, 2, -16),
    (7, 4, -40),
    (9, 4, -56),
])
def test_p_plus_r_values(p, r, value):
    assert sigma_p_plus_r(p, r) == value


def test_p_plus_r_sweep():
    for p in range(3, 30, 2):
        for r in range(2, p, 2):
            if math.gcd(p, r) == 1:
                assert sigma_p_plus_r(p, r) == sigma_closed(K(p, p + r))


@pytest.mark.parametrize("n, r, sign, value", [
    (1, 4, 1, -56),   # p = 9
    (1, 4, -1, -40),  # p = 7
    (1, 2, 1, -16),   # p = 5
])
def test_2nr_values(n, r, sign, value):
    assert sigma_2nr_closed(n, r, sign) == value


def test_2nr_sweep():
    for n in range(1, 5):
        for r in range(2, 11, 2):
            for sign in (1, -1):
                p = 2 * n * r + sign
                assert sigma_2nr_closed(n, r, sign) == sigma_closed(K(p, p + r))


@pytest.mark.parametrize("p, value", [
    (3, -8),
    (11, -80),
    (7, -40),
])
def test_p_plus_4_values(p, value):
    assert sigma_p_plus_4(p) == value


def test_p_plus_4_sweep():
    for p in range(3, 60, 2):
        assert sigma_p_plus_4(p) == sigma_closed(K(p, p + 4))


@pytest.mark.parametrize("p, q, value", [
    (5, 8, -16),
    (2, 3, -2),
    (9, 13, -48),
])
def test_corollary_bound_values(p, q, value):
    assert corollary_bound(K(p, q)) == value


def test_domain_errors():
    with pytest.raises(DomainError):
        sigma_p_plus_4(8)
    with pytest.raises(DomainError):
        sigma_p_plus_r(6, 2)
    with pytest.raises(DomainError):
        sigma_p_plus_r(5, 3)
    with pytest.raises(DomainError):
        sigma_2nr_closed(0, 4, 1)
    with pytest.raises(DomainError):
        sigma_oracle(K(3, 2))


@given(st.integers(2, 25), st.integers(3, 40))
def test_closed_oracle_agree_random(p, q):
    if p < q and math.gcd(p, q) == 1:
        assert sigma_closed(K(p, q)) == sigma_oracle(K(p, q))
