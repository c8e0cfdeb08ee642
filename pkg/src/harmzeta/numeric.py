"""Arbitrary-precision numerics and summation acceleration.

Floating values are ``mpmath.mpf``.  mpmath keeps its working precision in one
process-wide context, so every precision change goes through :func:`workprec`,
which serializes callers on a re-entrant lock.

The Euler-Maclaurin engine here evaluates tails

    sum_{k >= N} F(k) k^(-s),   F(x) = sum_{p,q} c[p,q] log(x)^p x^(-q),

where ``F`` usually comes from substituting the asymptotic expansion of H_x.
The integral part is done in closed form; for s + q == 1 the log-divergent
piece is dropped, which is exactly the regularization used by the
Stieltjes-type limits.
"""

from __future__ import annotations

import contextlib
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import mpmath

from harmzeta.exact import bernoulli

__all__ = [
    "DEFAULT_PREC",
    "GUARD_BITS",
    "workprec",
    "to_mpf",
    "SumResult",
    "NonConvergenceError",
    "PrecisionUnreachableError",
    "euler_transform_sum",
    "harmonic_number",
    "harmonic_numbers",
    "harmonic_asymptotic",
    "harmonic_asymptotic_bound",
    "LogPoly",
    "h_expansion",
    "em_tail",
    "log_harmonic_sum",
    "stieltjes_gamma",
]

DEFAULT_PREC = 128
GUARD_BITS = 16

_prec_lock = threading.RLock()


@contextlib.contextmanager
def workprec(bits: int):
    with _prec_lock:
        with mpmath.workprec(int(bits)):
            yield


def to_mpf(x) -> mpmath.mpf:
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


class NonConvergenceError(ArithmeticError):
    pass


class PrecisionUnreachableError(ArithmeticError):
    pass


@dataclass(frozen=True)
class SumResult:
    value: mpmath.mpf
    error_bound: mpmath.mpf
    terms_used: int
    rigorous: bool = False


# ---------------------------------------------------------------------------
# Euler transform


def euler_transform_sum(
    term: Callable[[int], mpmath.mpf],
    target_error=None,
    *,
    prec: int = DEFAULT_PREC,
    max_terms: int | None = None,
    stall_limit: int = 64,
    guard: int = 48,
) -> SumResult:
    """Sum ``term(1) + term(2) + ...`` for an alternating ``term`` by Euler's transform.

    With b_i = |term(i+1)| the result is sum_n (-1)^n Delta^n b_0 / 2^(n+1).  For
    divergent series of polynomial-times-log growth this converges to the Abel
    value.  The difference table loses absolute, not relative, accuracy, so the
    working precision only needs to cover the magnitude of the raw terms; it is
    raised and the sum restarted if the terms outgrow the guard.

    Raises NonConvergenceError if the transformed terms fail to decrease for
    ``stall_limit`` consecutive steps or ``max_terms`` is exhausted.
    """
    if target_error is None:
        target_bits = prec
    else:
        t = mpmath.mpf(target_error)
        if t <= 0:
            raise ValueError("target_error must be positive")
        target_bits = max(8, int(-mpmath.log(t, 2)) + 1)
    bits = max(prec, target_bits + 8)
    if max_terms is None:
        max_terms = 4 * bits + 256

    while True:
        work = bits + guard
        with workprec(work):
            target = mpmath.ldexp(1, -target_bits)
            diffs: list = []
            total = mpmath.mpf(0)
            biggest = mpmath.mpf(0)
            best = mpmath.inf
            stall = small = 0
            restart = False
            half = mpmath.mpf(1) / 2
            scale = half
            for n in range(max_terms):
                k = n + 1
                b = term(k)
                if k % 2 == 0:
                    b = -b
                b = mpmath.mpf(b)
                ab = abs(b)
                if ab > biggest:
                    biggest = ab
                    if biggest and mpmath.log(biggest, 2) + math.log2(n + 2) + 8 > guard:
                        guard = int(mpmath.log(biggest, 2) + math.log2(n + 2)) + 64
                        restart = True
                        break
                new = [b]
                for j in range(1, n + 1):
                    new.append(new[j - 1] - diffs[j - 1])
                diffs = new
                t = diffs[n] * scale
                if n % 2:
                    t = -t
                scale *= half
                total += t
                at = abs(t)
                if at <= target / 4:
                    small += 1
                    if small >= 3:
                        err = 2 * at + mpmath.ldexp(biggest * (n + 1), -work + 4)
                        with workprec(bits):
                            return SumResult(+total, +err, n + 1, False)
                else:
                    small = 0
                if at < best or not best:
                    best, stall = at, 0
                elif at > target / 4:
                    stall += 1
                    if stall >= stall_limit:
                        raise NonConvergenceError(
                            f"Euler transform stalled after {n + 1} terms "
                            f"(last transformed term {mpmath.nstr(at, 5)})"
                        )
            if not restart:
                raise NonConvergenceError(f"target not reached within {max_terms} terms")


# ---------------------------------------------------------------------------
# harmonic numbers

_h_lock = threading.Lock()
_h_cache: list[Fraction] = [Fraction(0)]


def harmonic_number(n: int) -> Fraction:
    """Exact H_n.  Prefix sums are cached, so sweeping n = 1..N costs N additions."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n < len(_h_cache):
        return _h_cache[n]
    with _h_lock:
        h = _h_cache[-1]
        for k in range(len(_h_cache), n + 1):
            h = h + Fraction(1, k)
            _h_cache.append(h)
        return _h_cache[n]


def harmonic_numbers(n: int) -> list[Fraction]:
    """[H_0, H_1, ..., H_n]."""
    harmonic_number(max(n, 1))
    return _h_cache[: n + 1]


def harmonic_asymptotic(n, order: int) -> mpmath.mpf:
    """log n + gamma + 1/(2n) - sum_{a=1}^{order} B_{2a} / (2a n^{2a})."""
    n = to_mpf(n)
    if n < 2:
        raise ValueError("n must be >= 2")
    s = mpmath.log(n) + mpmath.euler + 1 / (2 * n)
    for a in range(1, order + 1):
        s -= to_mpf(bernoulli(2 * a)) / (2 * a * n ** (2 * a))
    return s


def harmonic_asymptotic_bound(n, order: int) -> mpmath.mpf:
    """Magnitude of the first omitted term; bounds the remainder of :func:`harmonic_asymptotic`."""
    n = to_mpf(n)
    a = order + 1
    return abs(to_mpf(bernoulli(2 * a))) / (2 * a * n ** (2 * a))


# ---------------------------------------------------------------------------
# polynomials in (log x, 1/x)


class LogPoly(dict):
    """{(p, q): coeff} standing for sum coeff * log(x)^p * x^(-q)."""

    def trunc(self, qmax: int) -> LogPoly:
        return LogPoly({k: v for k, v in self.items() if k[1] <= qmax and v != 0})

    def __add__(self, other: LogPoly) -> LogPoly:
        out = LogPoly(self)
        for k, v in other.items():
            out[k] = out.get(k, 0) + v
        return out

    def scale(self, c) -> LogPoly:
        return LogPoly({k: v * c for k, v in self.items()})

    def mul(self, other: LogPoly, qmax: int) -> LogPoly:
        out = LogPoly()
        for (p1, q1), a in self.items():
            for (p2, q2), b in other.items():
                q = q1 + q2
                if q <= qmax:
                    key = (p1 + p2, q)
                    out[key] = out.get(key, 0) + a * b
        return out

    def pow(self, m: int, qmax: int) -> LogPoly:
        out = LogPoly({(0, 0): mpmath.mpf(1)})
        for _ in range(m):
            out = out.mul(self, qmax)
        return out

    def shift_log(self, n: int) -> LogPoly:
        return LogPoly({(p + n, q): v for (p, q), v in self.items()})

    def drop_q0(self) -> LogPoly:
        return LogPoly({k: v for k, v in self.items() if k[1] != 0})

    @property
    def max_p(self) -> int:
        return max((p for p, _ in self), default=0)


def h_expansion(bernoulli_terms: int) -> tuple[LogPoly, LogPoly]:
    """(L + gamma, r) with H_x ~ log x + gamma + r(x), r = 1/(2x) - sum B_2a/(2a x^2a)."""
    base = LogPoly({(1, 0): mpmath.mpf(1), (0, 0): +mpmath.euler})
    r = LogPoly({(0, 1): mpmath.mpf(1) / 2})
    for a in range(1, bernoulli_terms + 1):
        r[(0, 2 * a)] = -to_mpf(bernoulli(2 * a)) / (2 * a)
    return base, r


@dataclass(frozen=True)
class TailResult:
    value: mpmath.mpf
    error: mpmath.mpf
    em_terms: int


def _series_mul(a: list, b: list, T: int) -> list:
    out = [mpmath.mpf(0)] * (T + 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j in range(T + 1 - i):
            out[i + j] += x * b[j]
    return out


def em_tail(F: LogPoly, s, N: int, eps, max_em_terms: int = 30) -> TailResult:
    """Regularized sum_{k>=N} F(k) k^(-s) by Euler-Maclaurin at the current precision.

    Raises PrecisionUnreachableError when the EM correction terms stop
    shrinking before reaching ``eps`` (relative to the tail's scale).
    """
    s = mpmath.mpf(s)
    Nm = mpmath.mpf(N)
    LN = mpmath.log(Nm)
    pmax = F.max_p

    # closed-form integral
    integral = mpmath.mpf(0)
    for (p, q), c in F.items():
        e = q + s
        if e == 1:
            integral -= c * LN ** (p + 1) / (p + 1)
            continue
        a = e - 1
        acc = mpmath.mpf(0)
        fall = mpmath.mpf(1)
        for t in range(p + 1):
            acc += fall * LN ** (p - t) / a ** (t + 1)
            fall *= p - t
        integral += c * Nm ** (-a) * acc

    # Taylor expansion of f(N + t)
    T = 2 * max_em_terms + 1
    Lser = [LN] + [(-1) ** (u + 1) / (u * Nm ** u) for u in range(1, T + 1)]
    Lpow = [[mpmath.mpf(1)] + [mpmath.mpf(0)] * T]
    for _ in range(pmax):
        Lpow.append(_series_mul(Lpow[-1], Lser, T))
    G = [[mpmath.mpf(0)] * (T + 1) for _ in range(pmax + 1)]
    ycache: dict[int, list] = {}
    for (p, q), c in F.items():
        Y = ycache.get(q)
        if Y is None:
            e = q + s
            Y = [Nm ** (-e)]
            for u in range(1, T + 1):
                Y.append(Y[-1] * (-e - u + 1) / (u * Nm))
            ycache[q] = Y
        row = G[p]
        for u in range(T + 1):
            row[u] += c * Y[u]
    f = [mpmath.mpf(0)] * (T + 1)
    for p in range(pmax + 1):
        if any(G[p]):
            prod = _series_mul(Lpow[p], G[p], T)
            for u in range(T + 1):
                f[u] += prod[u]

    total = integral + f[0] / 2
    scale = max(abs(integral), abs(f[0]), mpmath.mpf(1))
    prev = mpmath.inf
    for j in range(1, max_em_terms + 1):
        term = to_mpf(bernoulli(2 * j)) / (2 * j) * f[2 * j - 1]
        total -= term
        at = abs(term)
        if at <= eps * scale and j >= 2:
            return TailResult(total, at, j)
        if at > prev and j > 3:
            break
        prev = at
    raise PrecisionUnreachableError(
        f"Euler-Maclaurin corrections at N={N} stalled at {mpmath.nstr(prev, 5)}; "
        "increase N or the correction order"
    )


def _plan(prec: int, extra: float) -> tuple[int, int, int]:
    """(work precision, cutoff N, Bernoulli terms) for a target of ``prec`` bits."""
    work = prec + GUARD_BITS + int(extra)
    N = max(32, work)
    q = int(work * math.log(2) / math.log(N)) + 3
    return work, N, (q + 1) // 2


def log_harmonic_sum(m: int, n: int, s, prec: int = DEFAULT_PREC, *, N: int | None = None,
                     extra_bits: int = 0) -> tuple[mpmath.mpf, mpmath.mpf]:
    """sum_k H_k^m log(k)^n k^(-s), analytically continued / regularized.

    For s = 1 this is the Stieltjes-type limit (divergent log powers removed),
    for s > 1 the convergent sum, and elsewhere the continuation of the
    Dirichlet series away from its poles.  Returns (value, error estimate).
    """
    if m < 0 or n < 0:
        raise ValueError("m, n must be >= 0")
    magnitude = (m + n + 1) * math.log2(max(2.0, math.log(max(prec, 32)) + 2)) + 4 * m
    work, N0, K = _plan(prec, magnitude + extra_bits)
    if N is None:
        N = N0
    for attempt in range(3):
        with workprec(work):
            s_m = mpmath.mpf(s)
            base, r = h_expansion(K)
            qmax = 2 * K + 1
            F = (base + r).pow(m, qmax).shift_log(n)
            head = mpmath.mpf(0)
            H = mpmath.mpf(0)
            for k in range(1, N):
                H += mpmath.mpf(1) / k
                term = H ** m * k ** (-s_m)
                if n:
                    term *= mpmath.log(k) ** n
                head += term
            eps = mpmath.ldexp(1, -(prec + 8))
            try:
                tail = em_tail(F, s_m, N, eps)
            except PrecisionUnreachableError:
                N *= 2
                continue
            trunc = harmonic_asymptotic_bound(N, K) * (m + 1) * (mpmath.log(N) + 2) ** (m + n)
            value = head + tail.value
            err = tail.error + trunc * N + abs(value) * mpmath.ldexp(1, -prec)
        with workprec(prec):
            return +value, +err
    raise PrecisionUnreachableError(f"could not reach {prec} bits for m={m}, n={n}, s={s}")


_STIELTJES_MAX = 32


@lru_cache(maxsize=None)
def stieltjes_gamma(n: int, prec: int = DEFAULT_PREC) -> mpmath.mpf:
    """Stieltjes constant gamma_n from its defining limit with EM correction."""
    if not 0 <= n <= _STIELTJES_MAX:
        raise ValueError(f"n must be in [0, {_STIELTJES_MAX}]")
    value, _ = log_harmonic_sum(0, n, 1, prec, extra_bits=2 * n)
    return value
