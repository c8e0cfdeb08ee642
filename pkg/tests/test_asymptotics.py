from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from harmzeta.asymptotics import (FAMILIES, asym_alternating, asym_harmonic_over_n, asym_plain_power,
                                  asymptotic_formula, exact_partial_sums, reduction_step_check, residual_table)
from harmzeta.constants import constcombo_eval
from harmzeta.negvalues import j_value_at_zero
from harmzeta.numeric import workprec

SMALL_GRID = (1, 2, 10, 37, 64)


def brute_partial_sums(family, m, grid):
    out, total, H = {}, Fraction(0), Fraction(0)
    for n in range(1, max(grid) + 1):
        H += Fraction(1, n)
        if family == "harmonic_over_n":
            total += H**m / n
        elif family == "alternating":
            total += H**m if n % 2 else -H**m
        else:
            total += H**m
        if n in grid:
            out[n] = total
    return out


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("m", [1, 2, 3, 5])
def test_exact_partial_sums_against_brute_force(family, m):
    assert exact_partial_sums(family, m, SMALL_GRID) == brute_partial_sums(family, m, SMALL_GRID)


def test_plain_power_examples():
    assert asym_plain_power(1, 3) == Fraction(13, 3)
    assert asym_plain_power(2, 1) == 1
    assert asym_plain_power(2, 2) == 1 + Fraction(9, 4)


@settings(max_examples=40)
@given(st.integers(min_value=1, max_value=300), st.sampled_from([1, 2]))
def test_plain_power_low_orders_exact(N, M):
    assert asym_plain_power(M, N) == brute_partial_sums("plain_power", M, (N,))[N]


@pytest.mark.parametrize("M,ref", [
    (3, lambda: mpmath.pi**2 / 12),
    (4, lambda: 3 * mpmath.zeta(3) - mpmath.pi**2 / 3),
    (5, lambda: 11 * mpmath.pi**4 / 60 - 15 * mpmath.zeta(3) + 5 * mpmath.pi**2 / 3),
])
def test_plain_power_constants(M, ref):
    with workprec(128):
        assert abs(constcombo_eval(asymptotic_formula("plain_power", M).constant_part, 128) - ref()) < 1e-30


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_alternating_constant_is_abel_value(m):
    assert asymptotic_formula("alternating", m).constant_part == j_value_at_zero(m)


def test_harmonic_over_n_m1_against_identity():
    # sum_{n<=N} H_n/n = (H_N^2 + H_N^(2))/2, so the constant is zeta(2)/2
    with workprec(128):
        assert abs(constcombo_eval(asymptotic_formula("harmonic_over_n", 1).constant_part, 128)
                   - mpmath.zeta(2) / 2) < 1e-30
    rows = residual_table("harmonic_over_n", 1, (100, 1000))
    assert abs(rows[1][1]) < 1e-2


def test_alternating_small_residual():
    rows = dict(residual_table("alternating", 1, (1000,)))
    assert abs(rows[1000]) < 1e-3


@pytest.mark.parametrize("family,m", [("harmonic_over_n", 2), ("alternating", 3), ("plain_power", 3)])
def test_residuals_shrink(family, m):
    mags = [abs(r) for _, r in residual_table(family, m, (50, 500, 5000))]
    assert mags[0] > mags[1] > mags[2]


def test_plain_low_orders_residual_zero():
    assert all(r == 0 for _, r in residual_table("plain_power", 2, SMALL_GRID))


@pytest.mark.parametrize("m", [3, 4, 5])
def test_reduction_step(m):
    report = reduction_step_check(m, (50, 500, 5000))
    assert report.passed, report.detail
    assert len(report.detail["residuals"]) == 3


def test_evaluator_ranges():
    with pytest.raises(ValueError):
        asym_harmonic_over_n(6, 10)
    with pytest.raises(ValueError):
        asym_alternating(5, 10)
    with pytest.raises(ValueError):
        asymptotic_formula("bogus", 1)
    with pytest.raises(ValueError):
        exact_partial_sums("plain_power", 6, (10,))
    with pytest.raises(ValueError):
        reduction_step_check(2)


def test_formula_object():
    f = asymptotic_formula("harmonic_over_n", 2, 64)
    assert f.family == "harmonic_over_n" and f.m == 2
    assert f.evaluator(2000) == asym_harmonic_over_n(2, 2000, 64)
    exact = exact_partial_sums("harmonic_over_n", 2, (2000,))[2000]
    (_, r), = residual_table("harmonic_over_n", 2, (2000,), 64)
    with workprec(64):
        assert abs(f.evaluator(2000) + r - mpmath.mpf(exact.numerator) / exact.denominator) < 1e-15
        # residual is O(log(N)^2 / N)
        assert abs(r) < mpmath.log(2000) ** 2 / 2000 * 2
