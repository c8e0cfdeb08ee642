"""Values of JZ(m, .) at non-positive integers and harmonic polylogarithms of negative order.

Everything at x = -1 goes through the Abel-regularized recursion

    JZ(m, -k) = g_m(k)/2 - sum_{j<k} C(k,j) eta(j-k) g_m(j),
    g_m(j)    = sum_{i=1}^{m} C(m,i) (-1)^(i+1) JZ(m-i, i-j),

obtained by putting x = -1 into the relation between sum H_n^m n^k x^n and
its difference sequence.  JZ(0, .) is the eta function.  Divergent series are
never summed directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import mpmath

from harmzeta.constants import ConstCombo, atom, constcombo_eval
from harmzeta.eulersums import alternating_harmonic_zeta, jz_closed_form
from harmzeta.exact import bernoulli, eta_nonpos, polylog_neg
from harmzeta.numeric import DEFAULT_PREC, GUARD_BITS, to_mpf, workprec

__all__ = [
    "NegValue",
    "HarmonicPolylogValue",
    "DivergenceError",
    "j_value_at_zero",
    "j1_negative",
    "h1_negative_even",
    "j2_negative",
    "j3_negative",
    "jm_negative_exact",
    "jm_negative",
    "negval",
    "harmonic_polylog",
]

_LOG2 = atom("log2")


class DivergenceError(ValueError):
    pass


@dataclass(frozen=True)
class NegValue:
    m: int
    n: int  # the argument is -n
    exact: ConstCombo | None
    numeric: mpmath.mpf
    route: str

    def to_json(self) -> dict:
        out = {"m": self.m, "n": self.n, "route": self.route, "value": mpmath.nstr(self.numeric, 30)}
        if self.exact is not None:
            out["exact"] = self.exact.to_json()
        return out


@dataclass(frozen=True)
class HarmonicPolylogValue:
    m: int
    s: int
    x: object
    value: mpmath.mpf
    route: str
    exact: Fraction | None = None


def _eta_combo(s: int) -> ConstCombo:
    """eta at any integer argument as a combination."""
    if s <= 0:
        return ConstCombo.rational(eta_nonpos(-s))
    return jz_closed_form(0, s)


# ---------------------------------------------------------------------------
# dedicated formulas


def j_value_at_zero(m: int) -> ConstCombo:
    """Abel value of sum (-1)^(n+1) H_n^m."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return ConstCombo.rational(Fraction(1, 2))
    out = ConstCombo()
    for k in range(1, m + 1):
        out = out + jz_closed_form(m - k, k) * Fraction(comb(m, k) * (-1) ** (k + 1), 2)
    return out


def h1_negative_even(n: int) -> Fraction:
    """HZ(1, -2n) = B_2n (2n-1) / (4n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return bernoulli(2 * n) * (2 * n - 1) / (4 * n)


@lru_cache(maxsize=None)
def j1_negative(n: int) -> ConstCombo:
    """JZ(1, -n) from the closed Bernoulli-number formulas."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return _LOG2 * Fraction(1, 2)
    if n == 1:
        return Fraction(1, 4) - _LOG2 * Fraction(1, 4)
    if n % 2 == 0:
        p = n // 2
        return ConstCombo.rational(-bernoulli(2 * p) / (4 * p) * (4**p - 1) * (2 * p - 1))
    p = (n + 1) // 2
    rational = Fraction(0)
    for k in range(1, p):
        rational -= Fraction(
            factorial(2 * p - 1) * (4**k - 1) * (4 ** (p - k) - 1),
            2 * k * factorial(2 * k) * factorial(2 * p - 2 * k),
        ) * bernoulli(2 * k) * bernoulli(2 * p - 2 * k)
    return _LOG2 * (-bernoulli(2 * p) * (4**p - 1) / (2 * p)) + rational


def _j1_any(s: int) -> ConstCombo:
    return j1_negative(-s) if s <= 0 else jz_closed_form(1, s)


@lru_cache(maxsize=None)
def j2_negative(k: int) -> ConstCombo:
    """JZ(2, -k) written through the m = 1 and m = 0 values."""
    if k < 0:
        raise ValueError("k must be >= 0")
    out = _j1_any(1 - k) - _eta_combo(2 - k) * Fraction(1, 2)
    for j in range(k):
        out = out + _eta_combo(j - k) * (_eta_combo(2 - j) - _j1_any(1 - j) * 2) * comb(k, j)
    return out


def _j2_any(s: int) -> ConstCombo:
    return j2_negative(-s) if s <= 0 else jz_closed_form(2, s)


@lru_cache(maxsize=None)
def j3_negative(k: int) -> ConstCombo:
    """JZ(3, -k) written through the m = 2, 1 and 0 values."""
    if k < 0:
        raise ValueError("k must be >= 0")

    def bracket(j: int) -> ConstCombo:
        return _j2_any(1 - j) * 3 - _j1_any(2 - j) * 3 + _eta_combo(3 - j)

    out = bracket(k) * Fraction(1, 2)
    for j in range(k):
        out = out - _eta_combo(j - k) * bracket(j) * comb(k, j)
    return out


# ---------------------------------------------------------------------------
# general recursion


@lru_cache(maxsize=None)
def jm_negative_exact(m: int, k: int) -> ConstCombo:
    """JZ(m, -k) as a combination; positive-argument values come from the registry."""
    if m < 0 or k < 0:
        raise ValueError("m, k must be >= 0")
    if m == 0:
        return _eta_combo(-k)

    def jz(a: int, s: int) -> ConstCombo:
        return jm_negative_exact(a, -s) if s <= 0 else jz_closed_form(a, s)

    def g(j: int) -> ConstCombo:
        out = ConstCombo()
        for i in range(1, m + 1):
            out = out + jz(m - i, i - j) * (comb(m, i) * (-1) ** (i + 1))
        return out

    out = g(k) * Fraction(1, 2)
    for j in range(k):
        out = out - g(j) * (comb(k, j) * eta_nonpos(k - j))
    return out


def jm_negative(m: int, k: int, prec: int = DEFAULT_PREC) -> mpmath.mpf:
    """JZ(m, -k) numerically through the recursion.

    Positive-argument values are summed numerically (Euler transform), not
    taken from closed forms, so this route is independent of the registry.
    """
    if m < 0 or k < 0:
        raise ValueError("m, k must be >= 0")
    work = prec + GUARD_BITS + 2 * k
    with workprec(work):
        v = _jm_numeric(m, k, work)
    with workprec(prec):
        return +v


@lru_cache(maxsize=None)
def _jm_numeric(m: int, k: int, prec: int) -> mpmath.mpf:
    if m == 0:
        return to_mpf(eta_nonpos(k))

    def jz(a: int, s: int):
        if s <= 0:
            return _jm_numeric(a, -s, prec)
        return alternating_harmonic_zeta(a, s, prec).value

    def g(j: int):
        return mpmath.fsum(comb(m, i) * (-1) ** (i + 1) * jz(m - i, i - j) for i in range(1, m + 1))

    with workprec(prec):
        out = g(k) / 2
        for j in range(k):
            out -= comb(k, j) * to_mpf(eta_nonpos(k - j)) * g(j)
        return out


def negval(m: int, n: int, prec: int = DEFAULT_PREC, exact: bool = True) -> NegValue:
    """JZ(m, -n) with the most specific exact route available."""
    if m == 0:
        combo, route = _eta_combo(-n), "eta"
    elif m == 1:
        combo, route = j1_negative(n), "bernoulli-formula"
    elif m == 2:
        combo, route = j2_negative(n), "j2-formula"
    elif m == 3:
        combo, route = j3_negative(n), "j3-formula"
    else:
        combo, route = jm_negative_exact(m, n), "recursion"
    value = constcombo_eval(combo, prec)
    return NegValue(m, n, combo if exact else None, value, route)


# ---------------------------------------------------------------------------
# harmonic polylogarithms


def _as_exact(x):
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    return None


def _direct(m: int, s: int, x, prec: int) -> mpmath.mpf:
    x = to_mpf(x)
    eps = mpmath.ldexp(1, -prec - 8)
    total = mpmath.mpf(0)
    H = mpmath.mpf(0)
    xn = mpmath.mpf(1)
    n = 0
    while True:
        n += 1
        H += mpmath.mpf(1) / n
        xn *= x
        t = H**m * xn / mpmath.mpf(n) ** s
        total += t
        if abs(t) < eps * max(1, abs(total)) and n > 10:
            return total
        if n > 200_000:
            raise DivergenceError("direct summation did not converge; |x| too close to 1")


def _li(s: int, x, prec: int):
    ex = _as_exact(x)
    if s <= 0:
        return polylog_neg(-s)(ex) if ex is not None else polylog_neg(-s)(to_mpf(x))
    return mpmath.polylog(s, to_mpf(x))


def _hl(m: int, s: int, x, prec: int):
    if m == 0:
        return _li(s, x, prec)
    if s > 0:
        return _direct(m, s, x, prec)
    k = -s
    out = 0
    for j in range(1, m + 1):
        c = comb(m, j) * (-1) ** (j + 1)
        inner = _hl(m - j, j - k, x, prec)
        for l in range(k + 1):
            inner = inner + comb(k, l) * _li(l - k, x, prec) * _hl(m - j, j - l, x, prec)
        out = out + c * inner
    return out


def harmonic_polylog(m: int, s: int, x, prec: int = DEFAULT_PREC) -> HarmonicPolylogValue:
    """Hl(m, s; x) = sum H_n^m x^n / n^s.

    |x| < 1: s <= 0 uses the lower-m recursion, s > 0 sums directly.
    x = -1: s <= 0 via the Abel-regularized recursion, s > 0 via the Euler transform.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    ex = _as_exact(x)
    xv = ex if ex is not None else to_mpf(x)
    if xv == 1 and s <= 1:
        raise DivergenceError("x = 1 is a singular point for s <= 1; the series cannot be continued there")
    if xv == -1:
        if s <= 0:
            v = jm_negative(m, -s, prec)
            route = "abel-recursion"
        else:
            v = alternating_harmonic_zeta(m, s, prec).value
            route = "euler-transform"
        with workprec(prec):
            v = -v
        return HarmonicPolylogValue(m, s, x, v, route)
    if abs(xv) >= 1:
        raise DivergenceError("|x| must be < 1 (or x = -1)")
    with workprec(prec + GUARD_BITS):
        raw = _hl(m, s, xv, prec + GUARD_BITS)
        exact = raw if isinstance(raw, Fraction) else None
        v = to_mpf(raw)
    with workprec(prec):
        v = +v
    route = "direct" if s > 0 else "recursion"
    if m == 0:
        route = "polylog"
    return HarmonicPolylogValue(m, s, x, v, route, exact)
