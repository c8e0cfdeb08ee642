from math import gcd

import pytest
from hypothesis import assume, given, strategies as st

from harmzeta.arith import (MAX_Q_ORDER, c_m_of_n, cm_identity_check, cm_identity_sweep,
                            cm_partial_sum_identity_check, divisor_profile, divisors, q_identity_check,
                            q_limit_check, sigma, sigma_minus, theta_q_series)

ms = st.integers(min_value=1, max_value=3000)


@given(ms)
def test_divisors_brute(m):
    assert list(divisors(m)) == [d for d in range(1, m + 1) if m % d == 0]


@pytest.mark.parametrize("m,expected", [(1, (1,)), (12, (1, 2, 3, 4, 6, 12)), (49, (1, 7, 49)), (97, (1, 97))])
def test_divisor_examples(m, expected):
    assert divisors(m) == expected


def test_sigma_examples():
    assert sigma(0, 12) == 6
    assert sigma(1, 12) == 28
    assert sigma(2, 6) == 50
    assert sigma_minus(1, 12) == 2 + 4 + 6 + 12 - 1 - 3
    assert sigma_minus(0, 9) == -3


@given(ms, ms, st.integers(min_value=0, max_value=4))
def test_sigma_multiplicative(a, b, k):
    assume(gcd(a, b) == 1)
    assert sigma(k, a * b) == sigma(k, a) * sigma(k, b)


@given(st.integers(min_value=0, max_value=1500), st.integers(min_value=0, max_value=6))
def test_sigma_minus_odd_is_negated_sigma(j, k):
    m = 2 * j + 1
    assert sigma_minus(k, m) == -sigma(k, m)


@given(ms, st.integers(min_value=1, max_value=4000))
def test_c_m_of_n_counts(m, n):
    assert c_m_of_n(m, n) == sum(1 for d in range(1, min(m, n) + 1) if m % d == 0)


def test_c_m_of_n_saturates():
    for m in range(1, 200):
        assert c_m_of_n(m, m) == sigma(0, m) == c_m_of_n(m, 10 * m)
    with pytest.raises(ValueError):
        c_m_of_n(0, 3)


@given(st.integers(min_value=1, max_value=400), st.integers(min_value=0, max_value=8))
def test_fast_lhs_matches_brute(m, k):
    fast = cm_identity_check(m, k)
    brute = cm_identity_check(m, k, brute=True)
    assert fast.lhs == brute.lhs
    assert fast.passed


@pytest.mark.parametrize("m,expected", [(9, -3), (15, -4), (1, -1), (12, 4), (8, 3)])
def test_parity_k0(m, expected):
    c = cm_identity_check(m, 0)
    assert c.lhs == c.parity_rhs == expected


def test_parity_k1_examples():
    for m in (6, 7, 30, 45):
        c = cm_identity_check(m, 1)
        assert c.parity_rhs == c.lhs
    # -1*c(1) + 2*c(2) - 3*c(3) with c = (1, 1, 2)
    assert cm_identity_check(3, 1).lhs == -5


def test_no_parity_beyond_k1():
    assert cm_identity_check(10, 2).parity_rhs is None


def test_sweep_and_json():
    assert cm_identity_sweep(range(1, 300), 8) == []
    js = cm_identity_check(12, 1).to_json()
    assert js["pass"] is True and js["m"] == 12 and "parity_rhs" in js


def test_cm_check_ranges():
    with pytest.raises(ValueError):
        cm_identity_check(0, 1)
    with pytest.raises(ValueError):
        cm_identity_check(10, 9)


@pytest.mark.parametrize("n", [2, 3, 10, 57, 150])
def test_partial_sum_identity(n):
    r = cm_partial_sum_identity_check(n)
    assert r.passed and r.detail["lhs"] == r.detail["rhs"]


def test_theta_coefficients_are_divisor_counts():
    for n in (1, 5, 50):
        th = theta_q_series(n, 200)
        assert th[0] == 0
        assert all(th[j] == c_m_of_n(j, n) for j in range(1, 201))


def test_profile_cache_shared():
    assert divisor_profile(360) is divisor_profile(360)


@pytest.mark.parametrize("identity", ["harmonic_q", "theta2"])
@pytest.mark.parametrize("n", [0, 1, 2, 4])
def test_q_identities(identity, n):
    r = q_identity_check(identity, n, 10, 10)
    assert r.passed, r


@pytest.mark.parametrize("n", [0, 1, 3, 5])
def test_q_limit(n):
    r = q_limit_check(n, 10)
    assert r.passed, r


def test_q_argument_validation():
    with pytest.raises(ValueError):
        q_identity_check("nope", 1, 4, 4)
    with pytest.raises(ValueError):
        q_identity_check("theta2", 1, MAX_Q_ORDER + 1, 4)
    with pytest.raises(ValueError):
        q_identity_check("theta2", -1, 4, 4)
    with pytest.raises(ValueError):
        q_limit_check(-1, 4)
