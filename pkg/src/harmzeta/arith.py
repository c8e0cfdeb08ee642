"""Divisor counts c_m(n), divisor power sums and the q-analog identities built on them.

c_m(n) is the number of divisors of m that are <= n; it is the coefficient of
q^m in Theta_n = sum_{j<=n} q^j / (1 - q^j).

The q-identities are checked on bivariate truncated series: a series in x
whose coefficients are series in q.  Passing means equality of every
coefficient up to the stated orders, which is exact but finite.
"""

from __future__ import annotations

import threading
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt

from harmzeta.exact import eta_nonpos
from harmzeta.numeric import harmonic_number
from harmzeta.series import CheckReport, TruncSeries, polylog_series

__all__ = [
    "divisors",
    "DivisorProfile",
    "divisor_profile",
    "sigma",
    "sigma_minus",
    "c_m_of_n",
    "CmCheck",
    "cm_identity_check",
    "cm_identity_sweep",
    "cm_partial_sum_identity_check",
    "theta_q_series",
    "q_identity_check",
    "q_limit_check",
    "Q_IDENTITIES",
]

Q_IDENTITIES = ("harmonic_q", "theta2")
MAX_M = 100_000
MAX_K = 8
MAX_Q_ORDER = 24


@lru_cache(maxsize=4096)
def divisors(m: int) -> tuple[int, ...]:
    """Sorted divisors of m by trial division up to sqrt(m)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    small, large = [], []
    for d in range(1, isqrt(m) + 1):
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
    return tuple(small + large[::-1])


class DivisorProfile:
    """Divisors of m with cached sigma_k and sigma_k^- values."""

    def __init__(self, m: int):
        self.m = m
        self.divisors = list(divisors(m))
        self._sigma: dict[int, int] = {}
        self._sigma_minus: dict[int, int] = {}
        self._lock = threading.Lock()

    def sigma(self, k: int) -> int:
        with self._lock:
            if k not in self._sigma:
                self._sigma[k] = sum(d**k for d in self.divisors)
            return self._sigma[k]

    def sigma_minus(self, k: int) -> int:
        """sum_{d | m} (-1)^d d^k."""
        with self._lock:
            if k not in self._sigma_minus:
                self._sigma_minus[k] = sum(d**k if d % 2 == 0 else -(d**k) for d in self.divisors)
            return self._sigma_minus[k]

    def __repr__(self) -> str:
        return f"DivisorProfile(m={self.m}, divisors={self.divisors})"


@lru_cache(maxsize=4096)
def divisor_profile(m: int) -> DivisorProfile:
    return DivisorProfile(m)


def sigma(k: int, m: int) -> int:
    return divisor_profile(m).sigma(k)


def sigma_minus(k: int, m: int) -> int:
    return divisor_profile(m).sigma_minus(k)


def c_m_of_n(m: int, n: int) -> int:
    if m < 1 or n < 1:
        raise ValueError("m and n must be >= 1")
    return bisect_right(divisors(m), n)


# ---------------------------------------------------------------------------
# the c_m(n) identity


@dataclass(frozen=True)
class CmCheck:
    m: int
    k: int
    lhs: Fraction
    rhs: Fraction
    parity_rhs: Fraction | None = None

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs and (self.parity_rhs is None or self.parity_rhs == self.lhs)

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        out = {"m": self.m, "k": self.k, "lhs": str(self.lhs), "rhs": str(self.rhs), "pass": self.passed}
        if self.parity_rhs is not None:
            out["parity_rhs"] = str(self.parity_rhs)
        return out


class _AltPowerPrefix:
    """P_k(x) = sum_{n<=x} (-1)^n n^k, grown on demand."""

    def __init__(self, k: int):
        self.k = k
        self.values = [0]
        self.lock = threading.Lock()

    def __call__(self, x: int) -> int:
        with self.lock:
            v = self.values
            while len(v) <= x:
                n = len(v)
                v.append(v[-1] + (n**self.k if n % 2 == 0 else -(n**self.k)))
            return v[x]


@lru_cache(maxsize=None)
def _alt_prefix(k: int) -> _AltPowerPrefix:
    return _AltPowerPrefix(k)


def _lhs_brute(m: int, k: int) -> int:
    return sum((-1) ** n * n**k * c_m_of_n(m, n) for n in range(1, m + 1))


def _lhs_fast(m: int, k: int) -> int:
    # c_m(n) = #{d | m : d <= n}, so swap the order of summation
    P = _alt_prefix(k)
    top = P(m)
    return sum(top - P(d - 1) for d in divisors(m))


def _rhs(m: int, k: int) -> Fraction:
    prof = divisor_profile(m)
    s0, s0m = prof.sigma(0), prof.sigma_minus(0)
    alt = -_alt_prefix(k)(m)  # 1^k - 2^k + ... + (-1)^(m+1) m^k
    out = prof.sigma_minus(k) + eta_nonpos(k) * (s0 - s0m) - s0 * alt
    for j in range(1, k + 1):
        out -= comb(k, j) * eta_nonpos(k - j) * prof.sigma_minus(j)
    return Fraction(out)


def _parity_rhs(m: int, k: int) -> Fraction | None:
    prof = divisor_profile(m)
    if k == 0:
        if m % 2 == 0:
            return Fraction(sum(1 for d in prof.divisors if d % 2 == 0))
        return Fraction(-prof.sigma(0))
    if k == 1:
        if m % 2 == 0:
            return (Fraction(prof.sigma_minus(1), 2) - Fraction(prof.sigma_minus(0), 4)
                    + Fraction(2 * m + 1, 4) * prof.sigma(0))
        return -Fraction(prof.sigma(1), 2) - Fraction(m, 2) * prof.sigma(0)
    return None


def cm_identity_check(m: int, k: int, *, brute: bool = False) -> CmCheck:
    """Both sides of sum_{n<=m} (-1)^n n^k c_m(n) = (divisor-sum expression), exactly.

    For k = 0, 1 the parity special cases are checked as well.  ``brute``
    evaluates the left side straight from c_m(n) instead of the divisor
    rearrangement.
    """
    if not 1 <= m <= MAX_M:
        raise ValueError(f"m must be in 1..{MAX_M}")
    if not 0 <= k <= MAX_K:
        raise ValueError(f"k must be in 0..{MAX_K}")
    lhs = _lhs_brute(m, k) if brute else _lhs_fast(m, k)
    return CmCheck(m, k, Fraction(lhs), _rhs(m, k), _parity_rhs(m, k))


def cm_identity_sweep(m_range: range, k_max: int) -> list[CmCheck]:
    """Every failing check over m in ``m_range`` and 0 <= k <= k_max (empty when all pass)."""
    return [c for m in m_range for k in range(k_max + 1) if not (c := cm_identity_check(m, k))]


def cm_partial_sum_identity_check(n: int) -> CheckReport:
    """c_{n-1}(1) + c_{n-2}(2) + ... + c_1(n-1) == sigma_0(1) + ... + sigma_0(n) - n."""
    if n < 2:
        raise ValueError("n must be >= 2")
    lhs = sum(c_m_of_n(n - j, j) for j in range(1, n))
    rhs = sum(sigma(0, i) for i in range(1, n + 1)) - n
    return CheckReport("cm-partial-sum", n, lhs == rhs, None if lhs == rhs else n,
                       {"lhs": lhs, "rhs": rhs})


# ---------------------------------------------------------------------------
# q-series


def _q_geometric(j: int, shift: int, power: int, q_order: int) -> TruncSeries:
    """q^shift / (1 - q^j)^power."""
    base = TruncSeries([Fraction(1) if i % j == 0 else Fraction(0) for i in range(q_order + 1)], q_order, "q")
    out = TruncSeries.constant(Fraction(1), q_order, "q")
    for _ in range(power):
        out = out * base
    coeffs = [Fraction(0)] * shift + list(out.coeffs)
    return TruncSeries(coeffs, q_order, "q")


def theta_q_series(n: int, q_order: int) -> TruncSeries:
    """Theta_n = sum_{j<=n} q^j / (1 - q^j) as a series in q."""
    out = TruncSeries([Fraction(0)], q_order, "q")
    for j in range(1, n + 1):
        out = out + _q_geometric(j, j, 1, q_order)
    return out


def _x_series(coef, x_order: int, q_order: int) -> TruncSeries:
    """sum_{k>=1} coef(k) x^k with q-series coefficients; coef(0) is never called."""
    zero = TruncSeries([Fraction(0)], q_order, "q")
    return TruncSeries([zero] + [coef(k) for k in range(1, x_order + 1)], x_order, "x")


def _phi(n: int, x_order: int, q_order: int) -> TruncSeries:
    return _x_series(lambda k: _q_geometric(k, k, 1, q_order).scale(k**n), x_order, q_order)


def _kappa(n: int, x_order: int, q_order: int) -> TruncSeries:
    return _x_series(lambda k: (_q_geometric(k, k, 1, q_order) * theta_q_series(k - 1, q_order)).scale(k**n),
                     x_order, q_order)


def _psi(n: int, x_order: int, q_order: int) -> TruncSeries:
    return _x_series(lambda k: _q_geometric(k, 2 * k, 2, q_order).scale(k**n), x_order, q_order)


def _check_orders(q_order: int, x_order: int) -> None:
    if not (1 <= q_order <= MAX_Q_ORDER and 1 <= x_order <= MAX_Q_ORDER):
        raise ValueError(f"orders must be in 1..{MAX_Q_ORDER}")


def _x_mismatch(lhs: TruncSeries, rhs: TruncSeries) -> int | None:
    for i, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        if a != b:
            return i
    return None


def q_identity_check(identity: str, n: int, q_order: int, x_order: int) -> CheckReport:
    """Exact truncated check of one of the q-analog identities.

    ``harmonic_q``: kappa_n == (phi_n - phi_{n+1} + sum_k C(n,k) phi_k phi_{n-k}) / 2
    ``theta2``:     sum Theta_k^2 k^n x^k == 2 kappa_n + psi_n + sum_k C(n,k) Li_{k-n}(x) (2 kappa_k + psi_k)
    """
    if identity not in Q_IDENTITIES:
        raise ValueError(f"identity must be one of {Q_IDENTITIES}")
    if n < 0:
        raise ValueError("n must be >= 0")
    _check_orders(q_order, x_order)
    X, Q = x_order, q_order
    if identity == "harmonic_q":
        lhs = _kappa(n, X, Q)
        phis = [_phi(j, X, Q) for j in range(n + 2)]
        rhs = phis[n] - phis[n + 1]
        for j in range(n + 1):
            rhs = rhs + phis[j] * phis[n - j] * comb(n, j)
        rhs = rhs.scale(Fraction(1, 2))
    else:
        lhs = _x_series(lambda k: (lambda t: t * t)(theta_q_series(k, Q)).scale(k**n), X, Q)
        inner = [_kappa(j, X, Q).scale(2) + _psi(j, X, Q) for j in range(n + 1)]
        rhs = inner[n]
        for j in range(n + 1):
            li = polylog_series(j - n, X)
            rhs = rhs + li * inner[j] * comb(n, j)
    bad = _x_mismatch(lhs, rhs)
    return CheckReport(identity, x_order, bad is None, bad, {"n": n, "q_order": q_order})


def q_limit_check(n: int, x_order: int) -> CheckReport:
    """Hl_{-n}(x) = Li_{1-n}(x) + sum_k C(n,k) Li_{k-n}(x) Li_{1-k}(x), reached through q -> 1.

    The harmonic_q identity at index n + 1 is multiplied by (1 - q)^2.  Each
    factor q^a / (1 - q^b) then carries one (1 - q), which cancels against
    1 + q + ... + q^(b-1); the limit of each x-coefficient is exact:

        k^(n+1) q^k/(1-q^k) Theta_{k-1}   ->  k^n H_{k-1}
        phi_a phi_b                       ->  coefficients of Li_{1-a} Li_{1-b}
        phi_a alone                       ->  0
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if not 1 <= x_order <= 16:
        raise ValueError("x_order must be in 1..16")
    X = x_order
    N = n + 1

    def limit_sq_free(b: int) -> Fraction:
        # lim_{q->1} (1-q) / (1-q^b) = 1 / (1 + q + ... + q^(b-1)) at q = 1
        return Fraction(1, b)

    lhs_lim = TruncSeries([Fraction(0)] + [
        k**N * limit_sq_free(k) * sum((limit_sq_free(j) for j in range(1, k)), Fraction(0))
        for k in range(1, X + 1)], X)

    def phi_pair(a: int, b: int) -> TruncSeries:
        coeffs = [Fraction(0)] * (X + 1)
        for i in range(1, X + 1):
            for j in range(1, X + 1 - i):
                coeffs[i + j] += i**a * limit_sq_free(i) * j**b * limit_sq_free(j)
        return TruncSeries(coeffs, X)

    rhs_lim = TruncSeries([Fraction(0)], X)
    for j in range(N + 1):
        rhs_lim = rhs_lim + phi_pair(j, N - j).scale(Fraction(comb(N, j), 2))

    hl = TruncSeries([Fraction(0)] + [harmonic_number(k) * k**n for k in range(1, X + 1)], X)
    li_sum = polylog_series(1 - n, X)
    for k in range(n + 1):
        li_sum = li_sum + polylog_series(k - n, X) * polylog_series(1 - k, X) * comb(n, k)

    checks = {
        "limit-sides": lhs_lim.first_mismatch(rhs_lim),
        "hl-from-limit": hl.first_mismatch(lhs_lim + polylog_series(1 - n, X)),
        "hl-polylog": hl.first_mismatch(li_sum),
    }
    bad = [v for v in checks.values() if v is not None]
    return CheckReport("q-limit", x_order, not bad, min(bad) if bad else None,
                       {"n": n, "steps": {k: v is None for k, v in checks.items()}})
