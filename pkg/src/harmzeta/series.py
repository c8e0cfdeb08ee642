"""Truncated formal power series over exact rings and identity checkers.

Coefficients may be ``Fraction``, ``GammaPoly``, ``ConstCombo`` or another
``TruncSeries``.  Each series carries a variable name; multiplying two series
in the same variable is a Cauchy product, while a series in a different
variable (or any other ring element) acts as a scalar.  Bivariate work is
therefore "series in x whose coefficients are series in q".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Any, Callable, Sequence

from harmzeta.exact import polylog_neg

__all__ = [
    "TruncSeries",
    "series_pow",
    "polylog_series",
    "CheckReport",
    "master_relation_check",
    "cauchy_relation_check",
    "ThetaExpansion",
    "theta_expand",
]


def _zero_like(c):
    return c * 0


class TruncSeries:
    """sum_{n=0}^{order} coeffs[n] var^n + O(var^(order+1)).  Immutable."""

    __slots__ = ("coeffs", "order", "var")

    def __init__(self, coeffs: Sequence, order: int | None = None, var: str = "x", zero=None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        if zero is None:
            zero = _zero_like(coeffs[0]) if coeffs else Fraction(0)
        coeffs = coeffs[: order + 1]
        coeffs += [zero] * (order + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @classmethod
    def from_function(cls, f: Callable[[int], Any], order: int, var: str = "x") -> TruncSeries:
        return cls([f(n) for n in range(order + 1)], order, var)

    @classmethod
    def constant(cls, c, order: int, var: str = "x") -> TruncSeries:
        return cls([c], order, var, zero=_zero_like(c))

    @classmethod
    def variable(cls, order: int, var: str = "x") -> TruncSeries:
        return cls([Fraction(0), Fraction(1)], order, var)

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    @property
    def zero(self):
        return _zero_like(self.coeffs[0])

    def truncate(self, order: int) -> TruncSeries:
        return TruncSeries(self.coeffs, min(order, self.order), self.var)

    def _same(self, other) -> bool:
        return isinstance(other, TruncSeries) and other.var == self.var

    def __add__(self, other):
        if self._same(other):
            n = min(self.order, other.order)
            return TruncSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n, self.var)
        return TruncSeries((self.coeffs[0] + other,) + self.coeffs[1:], self.order, self.var)

    __radd__ = __add__

    def __neg__(self) -> TruncSeries:
        return TruncSeries([-a for a in self.coeffs], self.order, self.var)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> TruncSeries:
        return TruncSeries([a * c for a in self.coeffs], self.order, self.var)

    def __mul__(self, other):
        if not self._same(other):
            return self.scale(other)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = None
            for i in range(k + 1):
                if _is_zero(a[i]) or _is_zero(b[k - i]):
                    continue
                t = a[i] * b[k - i]
                acc = t if acc is None else acc + t
            out.append(acc if acc is not None else _zero_like(a[0] * b[0]))
        return TruncSeries(out, n, self.var)

    def __rmul__(self, other):
        return TruncSeries([other * a for a in self.coeffs], self.order, self.var)

    def __pow__(self, m: int) -> TruncSeries:
        return series_pow(self, m)

    def compose(self, inner: TruncSeries) -> TruncSeries:
        """self(inner(x)); ``inner`` must have zero constant term."""
        if not _is_zero(inner.coeffs[0]):
            raise ValueError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        acc = TruncSeries.constant(self.coeffs[n], n, inner.var)
        for c in reversed(self.coeffs[:n]):
            acc = acc * inner + c
        return acc

    def theta(self) -> TruncSeries:
        """x d/dx: coefficient n -> n * a_n."""
        return TruncSeries([a * n for n, a in enumerate(self.coeffs)], self.order, self.var)

    def __eq__(self, other) -> bool:
        if not self._same(other):
            return False
        n = min(self.order, other.order)
        return all(a == b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1]))

    __hash__ = None  # type: ignore[assignment]

    def first_mismatch(self, other: TruncSeries) -> int | None:
        n = min(self.order, other.order)
        for i in range(n + 1):
            if self.coeffs[i] != other.coeffs[i]:
                return i
        return None

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:6])
        more = ", ..." if self.order >= 6 else ""
        return f"TruncSeries([{shown}{more}], order={self.order}, var={self.var!r})"


def _is_zero(c) -> bool:
    if isinstance(c, TruncSeries):
        return all(_is_zero(a) for a in c.coeffs)
    return not c


def series_pow(f: TruncSeries, m: int) -> TruncSeries:
    """f^m by repeated squaring; f^0 is the series 1."""
    if m < 0:
        raise ValueError("m must be >= 0")
    one = f.coeffs[0] * 0 + 1
    out = TruncSeries.constant(one, f.order, f.var)
    base = f
    while m:
        if m & 1:
            out = out * base
        m >>= 1
        if m:
            base = base * base
    return out


def polylog_series(k: int, order: int, var: str = "x") -> TruncSeries:
    """Li_k(x) for integer k <= 1 expanded from its defining sum sum n^(-k) x^n."""
    if k > 1:
        raise ValueError("only orders k <= 1 are needed here")
    if k == 1:
        return TruncSeries([Fraction(0)] + [Fraction(1, n) for n in range(1, order + 1)], order, var)
    e = -k
    return TruncSeries([Fraction(0)] + [Fraction(n**e) for n in range(1, order + 1)], order, var)


@dataclass(frozen=True)
class CheckReport:
    name: str
    order: int
    passed: bool
    first_mismatch: int | None = None
    detail: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        out = {"identity": self.name, "order": self.order, "pass": self.passed,
               "first_mismatch": self.first_mismatch}
        out.update(self.detail)
        return out


def _as_list(seq, order: int, start: int = 0) -> list:
    """Materialize a sequence; callables are only evaluated from ``start`` on."""
    if callable(seq):
        tail = [seq(n) for n in range(max(start, 0), order + 1)]
        return [tail[0] * 0] * start + tail
    seq = list(seq)
    if len(seq) < order + 1:
        raise ValueError(f"sequence needs {order + 1} terms, got {len(seq)}")
    return seq[: order + 1]


def _weighted(seq: list, k: int, order: int, var: str = "x") -> TruncSeries:
    """sum_{n>=1} seq[n] n^k x^n."""
    zero = seq[0] * 0
    return TruncSeries([zero] + [seq[n] * n**k for n in range(1, order + 1)], order, var)


def master_relation_check(a, k: int, order: int, *, li_route: str = "sum") -> CheckReport:
    """Check Phi_k = phi_k + sum_j C(k,j) Li_{j-k} phi_j through x^order.

    Phi_k = sum a_n n^k x^n and phi_k = sum b_n n^k x^n with b_n = a_n - a_{n-1}.
    Li factors come from the defining sums (``li_route="sum"``) or from the
    rational-function form (``li_route="rational"``).
    """
    a = _as_list(a, order)
    if a[0] != 0:
        raise ValueError("a_0 must be 0")
    b = [a[0]] + [a[n] - a[n - 1] for n in range(1, order + 1)]
    lhs = _weighted(a, k, order)
    rhs = _weighted(b, k, order)
    for j in range(k + 1):
        if li_route == "rational":
            li = TruncSeries(polylog_neg(k - j).series(order), order)
        else:
            li = polylog_series(j - k, order)
        rhs = rhs + li * _weighted(b, j, order) * comb(k, j)
    bad = lhs.first_mismatch(rhs)
    return CheckReport("master", order, bad is None, bad, {"k": k})


def cauchy_relation_check(b, c, k: int, order: int) -> CheckReport:
    """Check the A/B/C relation for a_n = sum_{i<=n} b_i c_{n-i} through x^order."""
    b = _as_list(b, order)
    c = _as_list(c, order)
    a = [sum((b[i] * c[n - i] for i in range(n + 1)), b[0] * 0) for n in range(order + 1)]
    A = _weighted(a, k, order)
    B = [_weighted(b, j, order) for j in range(k + 1)]
    C = [_weighted(c, j, order) for j in range(k + 1)]
    if k == 0:
        rhs = B[0] * c[0] + C[0] * b[0] + B[0] * C[0] + (b[0] * c[0] - a[0])
    else:
        rhs = B[k] * c[0] + C[k] * b[0]
        for j in range(k + 1):
            rhs = rhs + B[j] * C[k - j] * comb(k, j)
    bad = A.first_mismatch(rhs)
    return CheckReport("cauchy", order, bad is None, bad, {"k": k})


@dataclass(frozen=True)
class ThetaExpansion:
    """Real and imaginary parts of sum_k (i theta)^k/k! sum_n a_n n^k x^n.

    Both are series in ``theta`` whose coefficients are series in ``x``.
    """

    real: TruncSeries
    imag: TruncSeries

    def coefficient(self, k: int) -> tuple[TruncSeries, TruncSeries]:
        return self.real[k], self.imag[k]


def theta_expand(a, x_order: int, theta_order: int) -> ThetaExpansion:
    a = _as_list(a, x_order, start=1)
    zero_x = _weighted(a, 0, x_order).scale(0)
    re, im = [], []
    for k in range(theta_order + 1):
        s = _weighted(a, k, x_order).scale(Fraction(1, factorial(k)))
        sign = -1 if k % 4 in (2, 3) else 1
        if k % 2 == 0:
            re.append(s.scale(sign))
            im.append(zero_x)
        else:
            re.append(zero_x)
            im.append(s.scale(sign))
    return ThetaExpansion(TruncSeries(re, theta_order, "theta"), TruncSeries(im, theta_order, "theta"))
