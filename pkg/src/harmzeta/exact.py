"""Exact arithmetic foundation.

Bernoulli numbers, zeta and eta at non-positive integers, negative-order
polylogarithms as rational functions, and polynomials in the Euler-Mascheroni
symbol.  Everything here is exact; ``fractions.Fraction`` is the rational type.

Bernoulli convention: B_1 = -1/2, so that zeta(1 - n) = (-1)^(n-1) B_n / n holds
for every n >= 1 (including zeta(0) = -1/2).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

__all__ = [
    "bernoulli",
    "zeta_nonpos",
    "eta_nonpos",
    "zeta_even",
    "Polynomial",
    "RationalFunction",
    "polylog_neg",
    "GammaPoly",
]

_bern_lock = threading.Lock()
_bern: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """B_n with B_1 = -1/2.  Memoized; the cache only ever grows."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n < len(_bern):
        return _bern[n]
    if n >= 3 and n % 2:
        return Fraction(0)
    with _bern_lock:
        # sum_{k=0}^{m} C(m+1, k) B_k = 0
        for m in range(len(_bern), n + 1):
            if m >= 3 and m % 2:
                _bern.append(Fraction(0))
                continue
            s = sum((comb(m + 1, k) * _bern[k] for k in range(m)), Fraction(0))
            _bern.append(-s / (m + 1))
        return _bern[n]


def zeta_nonpos(k: int) -> Fraction:
    """zeta(-k) for k >= 0."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return Fraction(-1, 2)
    return (-1) ** k * bernoulli(k + 1) / (k + 1)


def eta_nonpos(k: int) -> Fraction:
    """Dirichlet eta at -k, via eta(s) = (1 - 2^(1-s)) zeta(s)."""
    return (1 - 2 ** (1 + k)) * zeta_nonpos(k)


def zeta_even(k: int) -> Fraction:
    """Rational r with zeta(2k) = r * pi^(2k), k >= 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    from math import factorial

    return (-1) ** (k + 1) * bernoulli(2 * k) * Fraction(2 ** (2 * k - 1), factorial(2 * k))


def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Polynomial:
    """Dense univariate polynomial with rational coefficients (ascending)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: Polynomial) -> Polynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            return Polynomial(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def derivative(self) -> Polynomial:
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"


class RationalFunction:
    """numerator / denominator, both rational-coefficient polynomials in x."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial):
        if not den.coeffs:
            raise ZeroDivisionError("zero denominator polynomial")
        self.num = num
        self.den = den

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at x={x}")
        return self.num(x) / d

    def series(self, order: int) -> list[Fraction]:
        """Taylor coefficients at 0 up to x^order (denominator must not vanish at 0)."""
        d = self.den.coeffs
        if d[0] == 0:
            raise ZeroDivisionError("denominator vanishes at x=0")
        n = self.num.coeffs
        out: list[Fraction] = []
        for k in range(order + 1):
            acc = n[k] if k < len(n) else Fraction(0)
            for j in range(1, min(k, len(d) - 1) + 1):
                acc -= d[j] * out[k - j]
            out.append(acc / d[0])
        return out

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"


_polylog_cache: dict[int, RationalFunction] = {}
_polylog_lock = threading.Lock()


def polylog_neg(n: int) -> RationalFunction:
    """Li_{-n}(x) = sum_{k>=1} k^n x^k as num/(1-x)^(n+1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    with _polylog_lock:
        if n in _polylog_cache:
            return _polylog_cache[n]
        start = max((k for k in _polylog_cache if k <= n), default=None)
        if start is None:
            start, num = 0, Polynomial([0, 1])
        else:
            num = _polylog_cache[start].num
        one_minus_x = Polynomial([1, -1])
        x = Polynomial([0, 1])
        for k in range(start, n):
            # x d/dx [N / (1-x)^(k+1)] = x [N'(1-x) + (k+1) N] / (1-x)^(k+2)
            num = x * (num.derivative() * one_minus_x + num * (k + 1))
            _polylog_cache[k + 1] = RationalFunction(num, _one_minus_x_pow(k + 2))
        _polylog_cache.setdefault(0, RationalFunction(Polynomial([0, 1]), one_minus_x))
        return _polylog_cache[n]


def _one_minus_x_pow(e: int) -> Polynomial:
    return Polynomial((-1) ** j * comb(e, j) for j in range(e + 1))


class GammaPoly:
    """Polynomial in the symbol gamma with rational coefficients.

    ``coeffs[i]`` multiplies gamma^i.  Immutable; the zero polynomial has
    degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("GammaPoly is immutable")

    @classmethod
    def gamma(cls) -> GammaPoly:
        return cls([0, 1])

    @classmethod
    def constant(cls, c) -> GammaPoly:
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def _coerce(self, other) -> GammaPoly:
        if isinstance(other, GammaPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return GammaPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return GammaPoly(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self) -> GammaPoly:
        return GammaPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GammaPoly(c * other for c in self.coeffs)
        if not isinstance(other, GammaPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return GammaPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return GammaPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> GammaPoly:
        if e < 0:
            raise ValueError("negative power")
        out, base = GammaPoly([1]), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("GammaPoly", self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, gamma_value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * gamma_value + c
        return acc

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> GammaPoly:
        return cls(Fraction(s) for s in data)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "GammaPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else f"{c}*g^{i}" if i > 1 else f"{c}*g")
        return "GammaPoly(" + " + ".join(terms) + ")"
