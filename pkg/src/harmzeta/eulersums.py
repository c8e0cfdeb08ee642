"""Euler sums and generalized harmonic Stieltjes constants.

Notation: HZ(m, s) = sum H_n^m / n^s, JZ(m, s) = sum (-1)^(n+1) H_n^m / n^s, and
gt(m, n) for the constants in the Laurent expansion of HZ(m, s) at s = 1,

    gt(m, n) = lim_N [ sum_{k<=N} H_k^m log^n(k)/k - sum_j C(m,j) gamma^(m-j) log^(n+j+1)(N)/(n+j+1) ].

gt(0, n) is the Stieltjes constant gamma_n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

import mpmath

from harmzeta import kernels
from harmzeta.constants import ConstCombo, atom, constcombo_eval, zeta_combo
from harmzeta.exact import zeta_even
from harmzeta.numeric import (
    DEFAULT_PREC,
    GUARD_BITS,
    LogPoly,
    PrecisionUnreachableError,
    em_tail,
    euler_transform_sum,
    h_expansion,
    harmonic_number,
    log_harmonic_sum,
    to_mpf,
    workprec,
)

__all__ = [
    "MAX_M",
    "MAX_N",
    "MAX_K",
    "EulerSumValue",
    "HarmonicStieltjes",
    "harmonic_zeta",
    "harmonic_zeta_continued",
    "alternating_harmonic_zeta",
    "harmonic_stieltjes_constant",
    "zhst_v2",
    "hz_closed_form",
    "jz_closed_form",
    "eta_closed_form",
    "constant_term_closed_form",
    "solved_sum",
    "skewed_power_sum",
    "weighted_gap_sum",
    "weighted_gap_closed_form",
    "alternating_gap_sum",
    "eta_derivative_at_zero",
    "direct_sum",
]

# supported envelopes; raise them freely, they only bound test cost
MAX_M = 6
MAX_N = 8
MAX_K = 8


@dataclass(frozen=True)
class EulerSumValue:
    m: int
    s: object
    value: mpmath.mpf
    error_bound: mpmath.mpf
    method: str = "euler-maclaurin"
    rigorous: bool = False


@dataclass(frozen=True)
class HarmonicStieltjes:
    m: int
    n: int
    value: mpmath.mpf
    method: str  # "limit-accelerated" or "closed-form"
    error_bound: mpmath.mpf | None = None


def _check_prec(prec: int) -> int:
    if prec < 16:
        raise ValueError("precision must be at least 16 bits")
    return int(prec)


# ---------------------------------------------------------------------------
# numeric evaluation


@lru_cache(maxsize=512)
def harmonic_zeta(m: int, s, prec: int = DEFAULT_PREC) -> EulerSumValue:
    """HZ(m, s) for real s > 1: direct head plus an Euler-Maclaurin tail."""
    prec = _check_prec(prec)
    if m < 0:
        raise ValueError("m must be >= 0")
    if mpmath.mpf(s) <= 1:
        raise ValueError(f"HZ({m}, s) diverges for s <= 1 (got s={s})")
    value, err = log_harmonic_sum(m, 0, s, prec)
    return EulerSumValue(m, s, value, err)


def harmonic_zeta_continued(m: int, s, prec: int = DEFAULT_PREC, extra_bits: int = 0) -> mpmath.mpf:
    """Analytic continuation of HZ(m, s) to real s away from its poles.

    Uses the same Euler-Maclaurin evaluation as :func:`harmonic_zeta`; the
    closed-form tail integral continues analytically in s.  Near a pole the
    caller must supply ``extra_bits`` to absorb the cancellation.
    """
    value, _ = log_harmonic_sum(m, 0, s, prec, extra_bits=extra_bits)
    return value


def _h_mpf(k: int) -> mpmath.mpf:
    return to_mpf(harmonic_number(k))


@lru_cache(maxsize=512)
def alternating_harmonic_zeta(m: int, s, prec: int = DEFAULT_PREC) -> EulerSumValue:
    """JZ(m, s) for s > 0 by the Euler transform; m = 0 gives the eta function."""
    prec = _check_prec(prec)
    if m < 0:
        raise ValueError("m must be >= 0")
    if mpmath.mpf(s) <= 0:
        raise ValueError("the alternating series needs s > 0 here (use the negative-value routines)")

    def term(k: int):
        t = _h_mpf(k) ** m / mpmath.mpf(k) ** s
        return t if k % 2 else -t

    res = euler_transform_sum(term, mpmath.ldexp(1, -prec), prec=prec)
    return EulerSumValue(m, s, res.value, res.error_bound, "euler-transform")


@lru_cache(maxsize=256)
def harmonic_stieltjes_constant(m: int, n: int, prec: int = DEFAULT_PREC) -> HarmonicStieltjes:
    """gt(m, n) from its defining limit, accelerated by Euler-Maclaurin."""
    prec = _check_prec(prec)
    if not (0 <= m <= MAX_M and 0 <= n <= MAX_N):
        raise ValueError(f"supported envelope is m <= {MAX_M}, n <= {MAX_N}")
    try:
        value, err = log_harmonic_sum(m, n, 1, prec, extra_bits=2 * n)
    except PrecisionUnreachableError as exc:
        raise PrecisionUnreachableError(
            f"gt({m}, {n}) at {prec} bits: {exc}; try a larger cutoff or lower precision"
        ) from exc
    return HarmonicStieltjes(m, n, value, "limit-accelerated", err)


def zhst_v2(n: int, N: int = 100_000, prec: int = 64) -> mpmath.mpf:
    """gt(2, n) by the m = 2 specialization of the limit.

    The partial sum runs in double precision through the compiled kernel; the
    three explicit log-power counterterms are subtracted and the remaining
    o(1) is removed with an Euler-Maclaurin correction at N.
    """
    head = mpmath.mpf(kernels.log_weighted_sum(N, 2, n, 1.0))
    with workprec(prec + GUARD_BITS):
        L = mpmath.log(N)
        g = +mpmath.euler
        poly = L ** (n + 3) / (n + 3) + 2 * g * L ** (n + 2) / (n + 2) + g**2 * L ** (n + 1) / (n + 1)
        F = _h_powers(2, 12).shift_log(n)
        tail = em_tail(F, 1, N, mpmath.ldexp(1, -prec))
        f_N = sum(c * L**p * mpmath.mpf(N) ** (-q - 1) for (p, q), c in F.items())
        # sum_{k<=N} = const + poly(log N) + f(N) - tail_reg(N) - poly(log N)
        value = head - poly + (tail.value + poly - f_N)
    return +value


def _h_powers(m: int, K: int) -> LogPoly:
    base, r = h_expansion(K)
    return (base + r).pow(m, 2 * K + 1)


# ---------------------------------------------------------------------------
# exact closed forms


def hz_closed_form(m: int, s: int) -> ConstCombo:
    """HZ(m, s) in the canonical basis; a numeric ``HZ{m}_{s}`` atom when no closed form is registered."""
    if s < 2 or m < 0:
        raise ValueError("need m >= 0 and integer s >= 2")
    if m == 0:
        return zeta_combo(s)
    if m == 1:
        out = zeta_combo(s + 1) * Fraction(s + 2, 2)
        for k in range(1, s - 1):
            out = out - zeta_combo(s - k) * zeta_combo(k + 1) * Fraction(1, 2)
        return out
    known = _HZ_FORMS.get((m, s))
    if known is not None:
        return known()
    return atom(f"HZ{m}_{s}")


_HZ_FORMS = {
    (2, 2): lambda: zeta_combo(4) * Fraction(17, 4),
    (2, 3): lambda: zeta_combo(5) * Fraction(7, 2) - zeta_combo(2) * zeta_combo(3),
    (3, 2): lambda: zeta_combo(5) * 10 + zeta_combo(2) * zeta_combo(3),
}


def eta_closed_form(s: int) -> ConstCombo:
    """eta(s) for integer s >= 1."""
    if s < 1:
        raise ValueError("s must be >= 1")
    if s == 1:
        return atom("log2")
    return zeta_combo(s) * (1 - Fraction(2) ** (1 - s))


_LOG2 = atom("log2")
_PI2 = atom("pi2")
_Z3 = atom("zeta3")


def _jz_forms():
    li4 = atom("li4half")
    pi4 = _PI2 * _PI2
    weight4 = -2 * li4 - Fraction(7, 4) * _Z3 * _LOG2 + Fraction(1, 12) * _PI2 * _LOG2**2 - Fraction(1, 12) * _LOG2**4
    return {
        (1, 1): Fraction(1, 12) * _PI2 - Fraction(1, 2) * _LOG2**2,
        (1, 2): Fraction(5, 8) * _Z3,
        (2, 1): Fraction(3, 4) * _Z3 - Fraction(1, 12) * _PI2 * _LOG2 + Fraction(1, 3) * _LOG2**3,
        (1, 3): weight4 + Fraction(11, 360) * pi4,
        (2, 2): weight4 + Fraction(41, 1440) * pi4,
        (3, 1): Fraction(1, 144) * pi4 - Fraction(9, 8) * _Z3 * _LOG2
        + Fraction(1, 8) * _PI2 * _LOG2**2 - Fraction(1, 4) * _LOG2**4,
    }


_JZ_FORMS = _jz_forms()


def jz_closed_form(m: int, s: int) -> ConstCombo:
    """JZ(m, s) for integer s >= 1; a numeric ``JZ{m}_{s}`` atom beyond the registered weights."""
    if s < 1 or m < 0:
        raise ValueError("need m >= 0 and integer s >= 1")
    if m == 0:
        return eta_closed_form(s)
    known = _JZ_FORMS.get((m, s))
    return known if known is not None else atom(f"JZ{m}_{s}")


def constant_term_closed_form(m: int) -> ConstCombo:
    """gt(m, 0) as a combination of gamma, zeta values and HZ values."""
    if m < 1:
        raise ValueError("m must be >= 1")
    g = atom("gammaE")
    out = g ** (m + 1) * Fraction(1, m + 1) + zeta_combo(m + 1) * Fraction((-1) ** (m + 1), m + 1)
    for k in range(m - 1):
        out = out + hz_closed_form(k + 1, m - k) * Fraction(comb(m + 1, k + 1) * (-1) ** (k + m), m + 1)
    return out


def _stieltjes_combo(k: int) -> ConstCombo:
    return atom("gammaE") if k == 0 else atom(f"gamma{k}")


def solved_sum(m: int, prec: int = DEFAULT_PREC) -> tuple[ConstCombo, mpmath.mpf]:
    """sum_n (H_n^m - (log n + gamma)^m)/n as (closed form, value)."""
    if not 1 <= m <= MAX_M:
        raise ValueError(f"m must be in 1..{MAX_M}")
    g = atom("gammaE")
    out = constant_term_closed_form(m) - g ** (m + 1)
    for k in range(1, m + 1):
        out = out - _stieltjes_combo(k) * g ** (m - k) * comb(m, k)
    return out, constcombo_eval(out, prec)


def _gt(m: int, k: int, prec: int) -> mpmath.mpf:
    if m == 0:
        if k == 0:
            with workprec(prec):
                return +mpmath.euler
        from harmzeta.numeric import stieltjes_gamma

        return stieltjes_gamma(k, prec)
    return harmonic_stieltjes_constant(m, k, prec).value


def skewed_power_sum(m: int, prec: int = DEFAULT_PREC) -> mpmath.mpf:
    """sum_n ((H_n - log n)^m - gamma^m)/n = -gamma^(m+1) + sum_k (-1)^k C(m,k) gt(m-k, k)."""
    if not 0 <= m <= 4:
        raise ValueError("m must be in 0..4")
    parts = [(-1) ** k * comb(m, k) * _gt(m - k, k, prec + 8) for k in range(m + 1)]
    with workprec(prec + 8):
        v = -mpmath.euler ** (m + 1) + mpmath.fsum(parts)
    with workprec(prec):
        return +v


def weighted_gap_closed_form(m: int) -> ConstCombo:
    """The part of sum H_n^m (H_n - log n - gamma)/n that is free of gt(m, 1).

    The full value is this combination minus gt(m, 1); it equals
    gt(m+1, 0) - gt(m, 1) - gamma * gt(m, 0).
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    g = atom("gammaE")
    out = (-g ** (m + 2)) * Fraction(1, (m + 1) * (m + 2))
    out = out + zeta_combo(m + 2) * Fraction((-1) ** m, m + 2)
    if m >= 1:
        out = out + g * zeta_combo(m + 1) * Fraction((-1) ** m, m + 1)
    else:
        # m = 0: gamma * gt(0, 0) = gamma^2 and the zeta(1)-free form applies
        return constant_term_closed_form(1) - g * g
    for k in range(m):
        out = out + hz_closed_form(k + 1, m + 1 - k) * Fraction(comb(m + 2, k + 1) * (-1) ** (k + m + 1), m + 2)
    for k in range(m - 1):
        out = out - g * hz_closed_form(k + 1, m - k) * Fraction(comb(m + 1, k + 1) * (-1) ** (k + m), m + 1)
    return out


def weighted_gap_sum(m: int, prec: int = DEFAULT_PREC) -> mpmath.mpf:
    """sum_n H_n^m (H_n - log n - gamma)/n."""
    if not 0 <= m <= 4:
        raise ValueError("m must be in 0..4")
    base = constcombo_eval(weighted_gap_closed_form(m), prec + 8)
    with workprec(prec + 8):
        v = base - _gt(m, 1, prec + 8)
    with workprec(prec):
        return +v


@lru_cache(maxsize=64)
def eta_derivative_at_zero(k: int, prec: int = DEFAULT_PREC) -> mpmath.mpf:
    """eta^(k)(0) = Abel sum of (-1)^(n+1) (-log n)^k, by the Euler transform."""
    if not 0 <= k <= MAX_K:
        raise ValueError(f"k must be in 0..{MAX_K}")
    if k == 0:
        with workprec(prec):
            return mpmath.mpf(1) / 2
    sign = (-1) ** k

    def term(n: int):
        t = sign * mpmath.log(n) ** k
        return t if n % 2 else -t

    return euler_transform_sum(term, mpmath.ldexp(1, -prec), prec=prec).value


def alternating_gap_sum(m: int, prec: int = DEFAULT_PREC) -> mpmath.mpf:
    """Abel value of sum (-1)^(n+1) (H_n^m - (log n + gamma)^m)."""
    if not 0 <= m <= 4:
        raise ValueError("m must be in 0..4")
    work = prec + 8
    terms = []
    for k in range(1, m + 1):
        j = constcombo_eval(jz_closed_form(m - k, k), work)
        e = eta_derivative_at_zero(k, work)
        with workprec(work):
            terms.append(comb(m, k) * (-1) ** (k + 1) * (j / 2 + mpmath.euler ** (m - k) * e))
    with workprec(work):
        v = -mpmath.euler**m / 2 + mpmath.fsum(terms)
    with workprec(prec):
        return +v


# ---------------------------------------------------------------------------
# direct-summation oracles (compiled head + Euler-Maclaurin tail)


def _tail_poly(kind: str, m: int, K: int) -> LogPoly:
    base, r = h_expansion(K)
    qmax = 2 * K + 1
    g = +mpmath.euler
    if kind == "gap":
        return ((base + r).pow(m, qmax) + base.pow(m, qmax).scale(-1)).trunc(qmax)
    if kind == "skew":
        gr = r + LogPoly({(0, 0): g})
        return gr.pow(m, qmax) + LogPoly({(0, 0): -(g**m)})
    if kind == "weighted":
        return (base + r).pow(m, qmax).mul(r, qmax)
    raise ValueError(f"unknown kind {kind!r}")


def direct_sum(kind: str, m: int, N: int = 1_000_000) -> mpmath.mpf:
    """Partial sum to N in double precision plus the asymptotic tail beyond N.

    ``kind`` selects the summand: ``gap`` (H_n^m - (log n + gamma)^m)/n,
    ``skew`` ((H_n - log n)^m - gamma^m)/n, ``weighted`` H_n^m (H_n - log n - gamma)/n.
    """
    head = {"gap": kernels.gap_sum, "skew": kernels.skew_sum, "weighted": kernels.weighted_gap_sum}[kind](N, m)
    with workprec(80):
        F = _tail_poly(kind, m, 6)
        # drop vanishing entries so the tail integral sees only decaying terms
        F = LogPoly({k: v for k, v in F.items() if abs(v) > mpmath.ldexp(1, -70)})
        tail = em_tail(F, 1, N + 1, mpmath.mpf(10) ** -18)
        return mpmath.mpf(head) + tail.value
