"""Pole structure of HZ(m, s) = sum H_n^m / n^s.

All Laurent data at s = 1 - n is exact: the coefficient of (s - (1-n))^(-k)
is a polynomial in gamma with rational coefficients built from the table
a_n(l) of the recurrence

    a_n(l+1) = sum_{k=1}^{n-l} (-1)^k zeta(1-k) a_{n-k}(l),   a_n(0) = [n = 0].
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import mpmath

from harmzeta.constants import atom
from harmzeta.exact import GammaPoly, zeta_nonpos
from harmzeta.numeric import DEFAULT_PREC, workprec
from harmzeta.series import CheckReport, TruncSeries, series_pow

__all__ = [
    "N_MAX",
    "OrderExceededError",
    "LaurentCoeff",
    "pole_order",
    "a_coeff",
    "f_series",
    "residue",
    "laurent_coeff",
    "laurent_genfn_check",
    "residue_recursion_check",
    "H2_CONSTANT_AT_ZERO",
    "h2_constant_at_zero",
]

N_MAX = 64


class OrderExceededError(ValueError):
    pass


@dataclass(frozen=True)
class LaurentCoeff:
    m: int
    point: int
    k: int
    value: GammaPoly
    beyond_pole_order: bool = False

    def to_json(self) -> dict:
        return {"m": self.m, "point": self.point, "k": self.k, "value": self.value.to_json(),
                "beyond_pole_order": self.beyond_pole_order}


def pole_order(m: int, z: int) -> int:
    """Order of the pole of HZ(m, .) at the integer z <= 1 (negative = zero)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if z > 1:
        raise ValueError("poles only occur at z <= 1")
    if z == 1:
        return m + 1
    if z in (0, -1):
        return m
    return m - 1 if z % 2 == 0 else m


_a_lock = threading.Lock()
_a_table: list[list[Fraction]] = []  # _a_table[l][n]


def _zeta_term(k: int) -> Fraction:
    """(-1)^k zeta(1-k)."""
    return (-1) ** k * zeta_nonpos(k - 1)


def _ensure(lmax: int) -> None:
    with _a_lock:
        if not _a_table:
            _a_table.append([Fraction(1)] + [Fraction(0)] * N_MAX)
        while len(_a_table) <= lmax:
            prev = _a_table[-1]
            l = len(_a_table) - 1
            row = [Fraction(0)] * (N_MAX + 1)
            for n in range(l + 1, N_MAX + 1):
                row[n] = sum((_zeta_term(k) * prev[n - k] for k in range(1, n - l + 1)), Fraction(0))
            _a_table.append(row)


def a_coeff(n: int, l: int) -> Fraction:
    """a_n(l); zero when l > n or l < 0."""
    if not 0 <= n <= N_MAX:
        raise ValueError(f"n must be in 0..{N_MAX}")
    if l < 0 or l > n:
        return Fraction(0)
    _ensure(l)
    return _a_table[l][n]


def f_series(order: int) -> TruncSeries:
    """f(z) = sum_{n>=1} (-1)^n zeta(1-n) z^n."""
    return TruncSeries([Fraction(0)] + [_zeta_term(n) for n in range(1, order + 1)], order, "z")


def _check_point(point: int) -> int:
    if point > 1:
        raise ValueError("point must be <= 1")
    n = 1 - point
    if n > N_MAX:
        raise ValueError(f"point must be >= {1 - N_MAX}")
    return n


def _coefficient(m: int, n: int, k: int) -> GammaPoly:
    out = GammaPoly()
    g = GammaPoly.gamma()
    for l in range(m + 1):
        fall = 1
        for i in range(k - 1):
            fall *= l - i
        if fall == 0:
            continue
        a = a_coeff(n, l - k + 1)
        if a:
            out = out + (g ** (m - l)) * (comb(m, l) * fall * a)
    return out


def residue(m: int, point: int) -> GammaPoly:
    """Residue of HZ(m, .) at ``point`` = 1 - n."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return _coefficient(m, _check_point(point), 1)


def laurent_coeff(m: int, point: int, k: int) -> LaurentCoeff:
    """Coefficient of (s - point)^(-k) in the Laurent expansion of HZ(m, s).

    For pole_order(m, point) < k <= m + 1 the coefficient is computed anyway
    (it vanishes) and flagged; k > m + 1 is an error.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = _check_point(point)
    if k > m + 1:
        raise OrderExceededError(f"HZ({m}, s) has no pole of order {k} anywhere (maximum is {m + 1})")
    value = _coefficient(m, n, k)
    return LaurentCoeff(m, point, k, value, k > pole_order(m, point))


def laurent_genfn_check(m: int, k: int, order: int) -> CheckReport:
    """sum_n HZ-coefficient(1-n, k+1) x^n == m(m-1)...(m-k+1) (gamma + f(x))^(m-k)."""
    if not 0 <= k <= m:
        raise ValueError("need 0 <= k <= m")
    if order > N_MAX:
        raise ValueError(f"order must be <= {N_MAX}")
    lhs = TruncSeries([_coefficient(m, n, k + 1) for n in range(order + 1)], order, "z")
    f = f_series(order)
    gf = TruncSeries([GammaPoly.gamma()] + [GammaPoly.constant(c) for c in f.coeffs[1:]], order, "z")
    fall = 1
    for i in range(k):
        fall *= m - i
    rhs = series_pow(gf, m - k).scale(fall)
    bad = lhs.first_mismatch(rhs)
    return CheckReport("laurent-genfn", order, bad is None, bad, {"m": m, "k": k})


def residue_recursion_check(m_max: int, n_max: int) -> CheckReport:
    """Residue ladder H^{m+1}(p) = gamma H^m(p) + H^m(p+1)/2 + sum_k zeta(1-2k) H^m(2k+p).

    Checked for 1 <= m < m_max + 1 (so H^2 .. H^{m_max+1}) and p = 1, 0, ..., -n_max;
    residues at p + 1 = 2 are zero.  The sum over k runs while 2k + p <= 1.
    """
    g = GammaPoly.gamma()

    def res(m: int, p: int) -> GammaPoly:
        return GammaPoly() if p > 1 else residue(m, p)

    checked = 0
    for m in range(1, m_max + 1):
        for p in range(1, -n_max - 1, -1):
            rhs = g * res(m, p) + res(m, p + 1) * Fraction(1, 2)
            k = 1
            while 2 * k + p <= 1:
                rhs = rhs + res(m, 2 * k + p) * zeta_nonpos(2 * k - 1)
                k += 1
            lhs = res(m + 1, p)
            checked += 1
            if lhs != rhs:
                return CheckReport("residue-ladder", n_max, False, p, {"m": m + 1, "checked": checked})
    return CheckReport("residue-ladder", n_max, True, None, {"m_max": m_max, "checked": checked})


# constant term of HZ(2, s) at s = 0, after removing 1/s^2 + gamma/s
H2_CONSTANT_AT_ZERO = atom("gammaE") ** 2 * Fraction(1, 2) - 1


def h2_constant_at_zero(prec: int = DEFAULT_PREC, delta_bits: int = 40) -> mpmath.mpf:
    """Estimate lim_{s->0} (HZ(2, s) - 1/s^2 - gamma/s) from the continued series.

    The symmetric mean of g(+d) and g(-d), d = 2^-delta_bits, removes the odd
    part of g, leaving an O(d^2) error.
    """
    from harmzeta.eulersums import harmonic_zeta_continued

    extra = 4 * delta_bits + 32
    with workprec(prec + extra):
        d = mpmath.ldexp(1, -delta_bits)

        def g(s):
            return harmonic_zeta_continued(2, s, prec + extra, extra_bits=extra) - 1 / s**2 - mpmath.euler / s

        v = (g(d) + g(-d)) / 2
    with workprec(prec):
        return +v
