from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from harmzeta.constants import atom
from harmzeta.exact import GammaPoly
from harmzeta.numeric import harmonic_number
from harmzeta.series import (CheckReport, TruncSeries, cauchy_relation_check, master_relation_check,
                             polylog_series, series_pow, theta_expand)

fracs = st.builds(Fraction, st.integers(-200, 200), st.integers(1, 12))


def series_st(order=8):
    return st.lists(fracs, min_size=order + 1, max_size=order + 1).map(lambda c: TruncSeries(c, order))


def naive_product(a, b):
    n = min(len(a), len(b))
    return [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)]


def test_geometric_powers_are_binomials():
    geo = TruncSeries([1] * 11, 10)
    for m in range(6):
        p = series_pow(geo, m)
        assert list(p.coeffs) == [comb(n + m - 1, n) if m else int(n == 0) for n in range(11)]


def test_pow_examples():
    s = TruncSeries([1, 1], 4)
    assert list(series_pow(s, 3).coeffs) == [1, 3, 3, 1, 0]
    assert series_pow(s, 0) == TruncSeries.constant(Fraction(1), 4)
    with pytest.raises(ValueError):
        series_pow(s, -1)


@given(series_st(), series_st())
def test_product_matches_naive(a, b):
    assert list((a * b).coeffs) == naive_product(a.coeffs, b.coeffs)


@given(series_st(6), series_st(6), series_st(6))
def test_product_associative_and_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(series_st(6), st.integers(min_value=0, max_value=6))
def test_pow_matches_repeated_product(a, m):
    acc = TruncSeries.constant(Fraction(1), 6)
    for _ in range(m):
        acc = acc * a
    assert series_pow(a, m) == acc


def test_order_truncates_to_smaller():
    a = TruncSeries([1, 2, 3, 4], 3)
    b = TruncSeries([1, 1], 1)
    assert (a * b).order == 1


def test_immutable():
    a = TruncSeries([1, 2], 1)
    with pytest.raises(AttributeError):
        a.order = 5


def test_compose_exp_log():
    order = 8
    x = TruncSeries.variable(order)
    exp = TruncSeries([Fraction(1, factorial(n)) for n in range(order + 1)], order)
    log1p = TruncSeries([Fraction(0)] + [Fraction((-1) ** (n + 1), n) for n in range(1, order + 1)], order)
    assert exp.compose(log1p) == TruncSeries.constant(Fraction(1), order) + x
    with pytest.raises(ValueError):
        exp.compose(exp)


def test_exact_ring_coefficients():
    g = GammaPoly.gamma()
    s = TruncSeries([GammaPoly([1]), g], 3)
    assert series_pow(s, 2)[2] == g * g
    c = TruncSeries([atom("log2"), atom("pi2")], 2)
    assert (c * c)[1] == atom("log2") * atom("pi2") * 2


def test_bivariate_coefficients():
    q = TruncSeries([Fraction(1), Fraction(1)], 3, var="q")
    xs = TruncSeries([q, q], 2, var="x")
    sq = xs * xs
    assert sq[1] == q * q * 2
    assert sq[1][2] == 2


def test_polylog_series_rational_agreement():
    from harmzeta.exact import polylog_neg
    for k in range(0, 6):
        assert list(polylog_series(-k, 20).coeffs) == list(polylog_neg(k).series(20))
    assert polylog_series(1, 4)[4] == Fraction(1, 4)
    with pytest.raises(ValueError):
        polylog_series(2, 4)


@pytest.mark.parametrize("k", range(5))
def test_master_identity_linear(k):
    assert master_relation_check(lambda n: Fraction(n), k, 20)


def test_master_harmonic_square_order_25():
    report = master_relation_check(lambda n: harmonic_number(n) ** 2 if n else Fraction(0), 2, 25)
    assert report.passed and report.first_mismatch is None
    assert report.to_json()["identity"] == "master"


def test_master_both_li_routes_agree():
    seq = [Fraction(0)] + [Fraction(n * n - 3, n + 1) for n in range(1, 21)]
    for k in range(5):
        assert master_relation_check(seq, k, 20, li_route="rational")
        assert master_relation_check(seq, k, 20, li_route="sum")


def test_master_rejects_nonzero_start():
    with pytest.raises(ValueError):
        master_relation_check([Fraction(1)] * 10, 1, 9)


def test_master_short_sequence():
    with pytest.raises(ValueError):
        master_relation_check([Fraction(0)] * 5, 1, 9)


@given(st.lists(fracs, min_size=13, max_size=13), st.integers(min_value=0, max_value=5))
def test_master_random_sequences(tail, k):
    assert master_relation_check([Fraction(0)] + tail, k, 12)


@given(st.lists(fracs, min_size=11, max_size=11), st.lists(fracs, min_size=11, max_size=11),
       st.integers(min_value=0, max_value=5))
def test_cauchy_random(b, c, k):
    assert cauchy_relation_check(b, c, k, 10)


def test_cauchy_example():
    ones = [Fraction(1)] * 16
    r = cauchy_relation_check(ones, ones, 1, 15)
    assert isinstance(r, CheckReport) and r.passed
    assert r.to_json() == {"identity": "cauchy", "order": 15, "pass": True, "first_mismatch": None, "k": 1}


def test_theta_expand_against_exponential():
    a = lambda n: harmonic_number(n)  # noqa: E731
    ex = theta_expand(a, 6, 7)
    for k in range(8):
        re, im = ex.coefficient(k)
        ik = [1, 0, -1, 0][k % 4], [0, 1, 0, -1][k % 4]
        for n in range(1, 7):
            base = harmonic_number(n) * Fraction(n**k, factorial(k))
            assert re[n] == ik[0] * base
            assert im[n] == ik[1] * base
        assert re[0] == 0 and im[0] == 0
