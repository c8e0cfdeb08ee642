from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

import reference_tables
from harmzeta.eulersums import harmonic_zeta_continued
from harmzeta.exact import GammaPoly, zeta_nonpos
from harmzeta.laurent import (H2_CONSTANT_AT_ZERO, OrderExceededError, a_coeff, f_series, laurent_coeff,
                              laurent_genfn_check, pole_order, residue, residue_recursion_check)
from harmzeta.numeric import workprec

g = GammaPoly.gamma()


def _numeric_simple_residue(m, p):
    """(s - p) HZ(m, s) averaged over s = p +- d; exact up to O(d^2) at a simple pole."""
    with workprec(200):
        d = mpmath.ldexp(1, -30)
        hi = harmonic_zeta_continued(m, p + d, 150, extra_bits=100)
        lo = harmonic_zeta_continued(m, p - d, 150, extra_bits=100)
        return (hi - lo) * d / 2


@pytest.mark.parametrize("m,z,order", [(0, 1, 1), (0, 0, 0), (2, 1, 3), (2, 0, 2), (2, -1, 2), (2, -2, 1),
                                       (3, -3, 3), (3, -4, 2)])
def test_pole_order(m, z, order):
    assert pole_order(m, z) == order


def test_pole_order_domain():
    with pytest.raises(ValueError):
        pole_order(1, 2)
    with pytest.raises(ValueError):
        pole_order(-1, 0)


def test_at_one():
    assert residue(1, 1) == g
    assert laurent_coeff(1, 1, 2).value == GammaPoly([1])
    assert laurent_coeff(2, 1, 3).value == GammaPoly([2])


def test_at_zero_m2():
    assert laurent_coeff(2, 0, 2).value == GammaPoly([1])
    assert laurent_coeff(2, 0, 1).value == g


@pytest.mark.parametrize("m,p", [(1, 0), (1, -1), (1, -3), (2, -2), (1, -5)])
def test_simple_residues_against_continuation(m, p):
    assert pole_order(m, p) == 1
    r = residue(m, p)
    assert r.degree <= 0
    value = r.coeffs[0] if r.coeffs else Fraction(0)
    assert abs(_numeric_simple_residue(m, p) - mpmath.mpf(value.numerator) / value.denominator) < 1e-15


def test_trivial_zero_points_for_m1():
    for p in (-2, -4, -6):
        assert pole_order(1, p) == 0
        assert residue(1, p) == GammaPoly()


def test_table2_golden():
    for m in range(1, 7):
        for point in (1, 0, -1, -2, -3, -4):
            assert residue(m, point).to_json() == reference_tables.table2_row(m, point), (m, point)


def test_table3_rows():
    for n, row in enumerate(reference_tables.TABLE3, start=1):
        assert [a_coeff(n, l) for l in range(1, 5)] == [Fraction(v) for v in row]


def test_a_table_invariants():
    for n in range(1, 40):
        assert a_coeff(n, 1) == (-1) ** n * zeta_nonpos(n - 1)
        assert a_coeff(n, n) == Fraction(1, 2**n)
        assert a_coeff(n, n + 1) == 0
        assert a_coeff(n, 0) == 0
    # only f_1 is nonzero among odd indices, so a_{2n+1}(2) = 2 f_1 f_{2n} = zeta(1-2n)
    for n in range(1, 20):
        assert a_coeff(2 * n + 1, 2) == zeta_nonpos(2 * n - 1)


def test_a_coeff_range():
    with pytest.raises(ValueError):
        a_coeff(65, 1)
    assert a_coeff(5, -1) == 0


def test_f_series():
    f = f_series(6)
    assert f.var == "z"
    assert list(f.coeffs) == [0, Fraction(1, 2), Fraction(-1, 12), 0, Fraction(1, 120), 0, Fraction(-1, 252)]


@given(st.integers(min_value=0, max_value=5), st.integers(min_value=-20, max_value=1))
def test_residue_is_first_coefficient(m, point):
    assert laurent_coeff(m, point, 1).value == residue(m, point)


@given(st.integers(min_value=0, max_value=5), st.integers(min_value=-20, max_value=1))
def test_coefficients_vanish_beyond_pole(m, point):
    order = pole_order(m, point)
    for k in range(1, m + 2):
        c = laurent_coeff(m, point, k)
        assert c.beyond_pole_order == (k > order)
        if c.beyond_pole_order:
            assert c.value == GammaPoly()


@given(st.integers(min_value=1, max_value=5), st.integers(min_value=-20, max_value=1))
def test_leading_coefficient_nonzero(m, point):
    order = pole_order(m, point)
    if order > 0:
        assert laurent_coeff(m, point, order).value != GammaPoly()


def test_order_exceeded():
    with pytest.raises(OrderExceededError, match="maximum is 3"):
        laurent_coeff(2, 0, 4)
    with pytest.raises(ValueError):
        laurent_coeff(2, 0, 0)
    with pytest.raises(ValueError):
        residue(1, 2)


def test_genfn_and_ladder():
    for m in range(1, 5):
        for k in range(m + 1):
            assert laurent_genfn_check(m, k, 16)
    report = residue_recursion_check(4, 10)
    assert report.passed and report.detail["checked"] == 4 * 12


def test_json_roundtrip():
    c = laurent_coeff(3, 0, 1)
    js = c.to_json()
    assert GammaPoly.from_json(js["value"]) == c.value
    assert js["beyond_pole_order"] is False


def test_h2_constant_symbolic():
    assert H2_CONSTANT_AT_ZERO.to_json() == {"1": "-1", "gammaE^2": "1/2"}
