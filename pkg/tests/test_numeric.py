import threading
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from harmzeta.numeric import (NonConvergenceError, euler_transform_sum, harmonic_asymptotic,
                              harmonic_asymptotic_bound, harmonic_number, log_harmonic_sum, stieltjes_gamma,
                              to_mpf, workprec)


def test_euler_transform_log2():
    with workprec(64):
        r = euler_transform_sum(lambda k: mpmath.mpf(1 if k % 2 else -1) / k, mpmath.mpf("1e-15"), prec=64)
        assert abs(r.value - mpmath.log(2)) < 1e-15
    assert r.terms_used <= 60
    assert r.error_bound >= 0


def test_euler_transform_zero_series():
    r = euler_transform_sum(lambda k: mpmath.mpf(0), mpmath.mpf("1e-20"), prec=64)
    assert r.value == 0


def test_euler_transform_abel_value_of_harmonic_numbers():
    with workprec(96):
        r = euler_transform_sum(lambda k: to_mpf(harmonic_number(k)) * (1 if k % 2 else -1),
                                mpmath.mpf("1e-25"), prec=96)
        assert abs(r.value - mpmath.log(2) / 2) < 1e-25


def test_euler_transform_nonconvergence():
    with pytest.raises(NonConvergenceError):
        euler_transform_sum(lambda k: mpmath.mpf(2) ** (k * k) * (1 if k % 2 else -1), mpmath.mpf("1e-10"),
                            prec=64, max_terms=40)


@given(st.integers(min_value=1, max_value=4), st.integers(min_value=1, max_value=3))
def test_euler_transform_agrees_with_direct_alternating(p, q):
    # sum (-1)^(k+1) / k^p with a geometric damping q^-k: convergent and quickly summed directly
    def term(k):
        return mpmath.mpf(1 if k % 2 else -1) / (mpmath.mpf(k) ** p * mpmath.mpf(q + 1) ** k)

    with workprec(80):
        acc = euler_transform_sum(term, mpmath.mpf("1e-20"), prec=80)
        direct = mpmath.fsum(term(k) for k in range(1, 200))
        assert abs(acc.value - direct) <= acc.error_bound + mpmath.mpf("1e-20")


@pytest.mark.parametrize("n,expected", [(1, 1), (4, Fraction(25, 12)), (6, Fraction(49, 20)),
                                        (10, Fraction(7381, 2520))])
def test_harmonic_number(n, expected):
    assert harmonic_number(n) == expected


def test_harmonic_differences():
    for n in range(2, 500):
        assert harmonic_number(n) - harmonic_number(n - 1) == Fraction(1, n)


def test_harmonic_number_threads():
    results = {}

    def work(n):
        results[n] = harmonic_number(n)

    threads = [threading.Thread(target=work, args=(n,)) for n in range(900, 1000, 7)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(results[n] - harmonic_number(n - 1) == Fraction(1, n) for n in results)


def test_harmonic_asymptotic_examples():
    with workprec(128):
        assert abs(harmonic_asymptotic(10, 2) - to_mpf(Fraction(7381, 2520))) < 1e-8
        assert harmonic_asymptotic(2, 0) == mpmath.log(2) + mpmath.euler + mpmath.mpf(1) / 4
        assert abs(harmonic_asymptotic(100, 3) - to_mpf(harmonic_number(100))) < 1e-16


def test_harmonic_asymptotic_remainder_bound():
    with workprec(128):
        for n in (5, 20, 100):
            for order in range(6):
                err = abs(harmonic_asymptotic(n, order) - to_mpf(harmonic_number(n)))
                assert err <= harmonic_asymptotic_bound(n, order)


def test_harmonic_asymptotic_divergent_shape():
    with workprec(400):
        def best(n):
            errs = [abs(harmonic_asymptotic(n, k) - to_mpf(harmonic_number(n))) for k in range(0, 60)]
            return errs.index(min(errs)), errs

        locs = []
        for n in (2, 3, 5):
            k, errs = best(n)
            assert 0 < k < 59
            assert errs[-1] > errs[k]  # error grows again past the optimum
            locs.append(k)
        assert locs == sorted(locs)


@pytest.mark.parametrize("n,expected", [(0, "0.5772156649015"), (1, "-0.0728158454837"),
                                        (2, "-0.0096903631928")])
def test_stieltjes_examples(n, expected):
    assert abs(stieltjes_gamma(n, 64) - mpmath.mpf(expected)) < 1e-12


def test_stieltjes_against_mpmath():
    with workprec(140):
        for n in range(6):
            assert abs(stieltjes_gamma(n, 128) - mpmath.stieltjes(n)) < mpmath.mpf(10) ** -35


def test_stieltjes_cutoff_stable():
    for n in (1, 3):
        v1, e1 = log_harmonic_sum(0, n, 1, 128, N=64)
        v2, e2 = log_harmonic_sum(0, n, 1, 128, N=128)
        assert abs(v1 - v2) <= e1 + e2


def test_stieltjes_range():
    with pytest.raises(ValueError):
        stieltjes_gamma(33, 64)
