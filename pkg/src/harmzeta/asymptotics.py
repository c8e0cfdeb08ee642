"""Asymptotic formulas for partial sums of harmonic-number powers, with residual tables.

Three families are covered:

* ``harmonic_over_n``: sum_{n<=N} H_n^m / n
* ``alternating``:     sum_{n<=N} (-1)^(n+1) H_n^m
* ``plain_power``:     sum_{n<=N} H_n^M

Each evaluator returns the closed-form approximation at N; the residual is
the exact partial sum minus that value.  Partial sums are exact: with
L = lcm(1..N) every L*H_n is an integer, so powers and sums stay in integer
arithmetic until the final division.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import comb, factorial, gcd
from typing import Callable, Sequence

import mpmath

from harmzeta.constants import ConstCombo, constcombo_eval, zeta_combo
from harmzeta.eulersums import hz_closed_form, jz_closed_form
from harmzeta.numeric import DEFAULT_PREC, harmonic_number, to_mpf, workprec
from harmzeta.series import CheckReport

__all__ = [
    "FAMILIES",
    "AsymptoticFormula",
    "asymptotic_formula",
    "asym_harmonic_over_n",
    "asym_alternating",
    "asym_plain_power",
    "exact_partial_sums",
    "residual_table",
    "reduction_step_check",
]

FAMILIES = ("harmonic_over_n", "alternating", "plain_power")


@dataclass(frozen=True)
class AsymptoticFormula:
    family: str
    m: int
    evaluator: Callable[[int], mpmath.mpf]
    constant_part: ConstCombo


# ---------------------------------------------------------------------------
# constant parts


def _const_harmonic_over_n(m: int) -> ConstCombo:
    out = zeta_combo(m + 1) * Fraction((-1) ** (m + 1), m + 1)
    for k in range(m - 1):
        out = out + hz_closed_form(k + 1, m - k) * Fraction(comb(m + 1, k + 1) * (-1) ** (k + m), m + 1)
    return out


def _const_alternating(m: int) -> ConstCombo:
    out = ConstCombo()
    for k in range(m):
        out = out + jz_closed_form(k, m - k) * Fraction(comb(m, k) * (-1) ** (m - k - 1), 2)
    return out


def _plain_inner_constant(M: int) -> ConstCombo:
    """The constant inside the braces (before the (-1)^M M! factor)."""
    out = ConstCombo()
    for m in range(3, M + 1):
        out = out - zeta_combo(m - 1) * (Fraction(m, 2) - 1) / factorial(m)
    for m in range(4, M + 1):
        for k in range(1, m - 2):
            c = (Fraction(comb(m - 1, k) * m, 2) - comb(m, k)) * (-1) ** (k + 1) / factorial(m)
            out = out + hz_closed_form(k, m - k - 1) * c
    return out


def _const_plain(M: int) -> ConstCombo:
    if M <= 2:
        return ConstCombo()
    return _plain_inner_constant(M) * ((-1) ** M * factorial(M))


# ---------------------------------------------------------------------------
# evaluators


def _h_next(N: int) -> mpmath.mpf:
    return to_mpf(harmonic_number(N + 1))


def asym_harmonic_over_n(m: int, N: int, prec: int = DEFAULT_PREC) -> mpmath.mpf:
    if not 1 <= m <= 5:
        raise ValueError("m must be in 1..5")
    c = constcombo_eval(_const_harmonic_over_n(m), prec + 16)
    with workprec(prec + 16):
        v = _h_next(N) ** (m + 1) / (m + 1) + c
    with workprec(prec):
        return +v


def asym_alternating(m: int, N: int, prec: int = DEFAULT_PREC) -> mpmath.mpf:
    if not 1 <= m <= 4:
        raise ValueError("m must be in 1..4")
    c = constcombo_eval(_const_alternating(m), prec + 16)
    with workprec(prec + 16):
        v = (-1) ** (N + 1) * _h_next(N) ** m / 2 + c
    with workprec(prec):
        return +v


def _plain_exact(M: int, N: int) -> Fraction:
    h = harmonic_number(N + 1)
    if M == 1:
        return (N + 1) * (h - 1)
    return (N + 1) * h * h - (2 * N + 3) * h + 2 * N + 2


def asym_plain_power(M: int, N: int, prec: int = DEFAULT_PREC):
    """M = 1, 2: exact Fraction (the identities hold for every N).  M >= 3: BigFloat."""
    if not 1 <= M <= 5:
        raise ValueError("M must be in 1..5")
    if M <= 2:
        return _plain_exact(M, N)
    c = constcombo_eval(_const_plain(M), prec + 16)
    with workprec(prec + 16):
        h = _h_next(N)
        Nm = mpmath.mpf(N)
        half = Nm + mpmath.mpf(3) / 2
        brace = Nm + 1 + (Nm / 2 + mpmath.mpf(3) / 4) * h**2 - half * h
        for m in range(3, M):
            brace += (-1) ** m * h**m * half / factorial(m)
        v = (Nm + 1) * h**M + (-1) ** M * factorial(M) * brace + c
    with workprec(prec):
        return +v


_EVALUATORS = {
    "harmonic_over_n": (asym_harmonic_over_n, _const_harmonic_over_n),
    "alternating": (asym_alternating, _const_alternating),
    "plain_power": (asym_plain_power, _const_plain),
}


def asymptotic_formula(family: str, m: int, prec: int = DEFAULT_PREC) -> AsymptoticFormula:
    if family not in _EVALUATORS:
        raise ValueError(f"family must be one of {FAMILIES}")
    ev, const = _EVALUATORS[family]
    return AsymptoticFormula(family, m, lambda N: ev(m, N, prec), const(m))


# ---------------------------------------------------------------------------
# exact partial sums


def _lcm_upto(N: int) -> int:
    return reduce(lambda a, b: a * b // gcd(a, b), range(1, N + 1), 1)


_MAX_POWER = 5


@lru_cache(maxsize=4)
def _partial_sum_table(grid: tuple[int, ...], mmax: int) -> dict:
    """One integer pass to max(grid) accumulating every family for powers 1..mmax.

    Returns {(family, m): {N: Fraction}}.
    """
    top = max(grid)
    L = _lcm_upto(top)
    wanted = set(grid)
    ms = range(1, mmax + 1)
    acc = {(f, m): 0 for f in FAMILIES for m in ms}
    out: dict = {key: {} for key in acc}
    A = 0  # L * H_n
    for n in range(1, top + 1):
        step = L // n
        A += step
        p = A
        for m in ms:
            acc["plain_power", m] += p
            acc["alternating", m] += p if n % 2 else -p
            acc["harmonic_over_n", m] += p * step
            if m < mmax:
                p *= A
        if n in wanted:
            for (f, m), v in acc.items():
                scale = L ** (m + 1) if f == "harmonic_over_n" else L**m
                out[f, m][n] = Fraction(v, scale)
    return out


def exact_partial_sums(family: str, m: int, grid: Sequence[int]) -> dict[int, Fraction]:
    """Exact partial sums of ``family`` at every N in ``grid``."""
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}")
    if not 1 <= m <= _MAX_POWER:
        raise ValueError(f"m must be in 1..{_MAX_POWER}")
    # m <= 4 shares one table; m = 5 needs the more expensive full one
    return dict(_partial_sum_table(tuple(sorted(set(grid))), max(m, 4))[family, m])


def residual_table(family: str, m: int, grid: Sequence[int] = (100, 1000, 10000),
                   prec: int = DEFAULT_PREC) -> list[tuple[int, mpmath.mpf]]:
    """[(N, exact partial sum - asymptotic value)] over ``grid``."""
    exact = exact_partial_sums(family, m, grid)
    ev = _EVALUATORS[family][0]
    rows = []
    for N in sorted(grid):
        approx = ev(m, N, prec)
        if isinstance(approx, Fraction):
            rows.append((N, to_mpf(exact[N] - approx)))
            continue
        with workprec(prec):
            rows.append((N, to_mpf(exact[N]) - approx))
    return rows


def reduction_step_check(m: int, grid: Sequence[int] = (100, 1000, 10000),
                         prec: int = DEFAULT_PREC) -> CheckReport:
    """Residual of one reduction step sum H^m -> sum H^(m-1); passes if it strictly shrinks on the grid."""
    if not 3 <= m <= 5:
        raise ValueError("m must be in 3..5")
    table = _partial_sum_table(tuple(sorted(set(grid))), max(m, 4))
    s_m, s_prev = table["plain_power", m], table["plain_power", m - 1]
    const = zeta_combo(m - 1) * ((-1) ** (m - 1) * (Fraction(m, 2) - 1))
    for k in range(1, m - 2):
        c = (Fraction(comb(m - 1, k) * m, 2) - comb(m, k)) * (-1) ** (m - k - 1)
        const = const + hz_closed_form(k, m - k - 1) * c
    cval = constcombo_eval(const, prec + 16)
    residuals = []
    with workprec(prec + 16):
        for N in sorted(grid):
            h = _h_next(N)
            rhs = (N + 1) * h**m - mpmath.mpf(m) / 2 * h ** (m - 1) - m * to_mpf(s_prev[N]) + cval
            residuals.append(to_mpf(s_m[N]) - rhs)
    mags = [abs(r) for r in residuals]
    ok = all(b < a for a, b in zip(mags, mags[1:]))
    bad = None if ok else next(i for i in range(1, len(mags)) if mags[i] >= mags[i - 1])
    return CheckReport("reduction-step", m, ok, bad,
                       {"grid": list(sorted(grid)), "residuals": [mpmath.nstr(r, 8) for r in residuals]})
