"""Exact rational combinations of named transcendental constants.

A :class:`ConstCombo` maps monomials (multisets of atom names) to rational
coefficients.  Atoms are opaque symbols; no simplification between them is
attempted, so the caller picks the basis.  The canonical basis used throughout
the package writes even zeta values through ``pi2`` (= pi^2).

Monomial keys serialize as ``"1"`` for the empty monomial and otherwise as
sorted atom names joined by ``*`` with ``^k`` exponents, e.g. ``"pi2*log2^2"``.
"""

from __future__ import annotations

import json
import re
import threading
from collections import Counter
from fractions import Fraction
from typing import Callable, Iterable, Mapping

import mpmath

from harmzeta.numeric import workprec

__all__ = [
    "Monomial",
    "ConstCombo",
    "UnknownAtomError",
    "register_atom",
    "register_atom_pattern",
    "atom_value",
    "constcombo_eval",
    "atom",
    "zeta_combo",
]

Monomial = tuple  # sorted tuple of atom names, repetition = power

GUARD_BITS = 16


class UnknownAtomError(KeyError):
    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"no numeric generator registered for atom {self.name!r}"


def _key_to_str(mono: Monomial) -> str:
    if not mono:
        return "1"
    parts = []
    for name, e in sorted(Counter(mono).items()):
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _str_to_key(s: str) -> Monomial:
    s = s.strip()
    if s == "1":
        return ()
    out: list[str] = []
    for part in s.split("*"):
        name, _, e = part.partition("^")
        out.extend([name] * (int(e) if e else 1))
    return tuple(sorted(out))


class ConstCombo:
    """Immutable map monomial -> Fraction with no zero entries."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        acc: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, c in items:
            key = _str_to_key(mono) if isinstance(mono, str) else tuple(sorted(mono))
            acc[key] = acc.get(key, Fraction(0)) + Fraction(c)
        object.__setattr__(self, "_terms", {k: v for k, v in acc.items() if v != 0})
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("ConstCombo is immutable")

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    @classmethod
    def rational(cls, c) -> ConstCombo:
        return cls({(): c})

    def coefficient(self, mono: Monomial | str) -> Fraction:
        key = _str_to_key(mono) if isinstance(mono, str) else tuple(sorted(mono))
        return self._terms.get(key, Fraction(0))

    def atoms(self) -> set[str]:
        return {a for mono in self._terms for a in mono}

    def is_rational(self) -> bool:
        return all(not mono for mono in self._terms)

    def _coerce(self, other):
        if isinstance(other, ConstCombo):
            return other
        if isinstance(other, (int, Fraction)):
            return ConstCombo.rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return ConstCombo(out)

    __radd__ = __add__

    def __neg__(self) -> ConstCombo:
        return ConstCombo({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ConstCombo({k: v * other for k, v in self._terms.items()})
        if not isinstance(other, ConstCombo):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for ka, va in self._terms.items():
            for kb, vb in other._terms.items():
                key = tuple(sorted(ka + kb))
                out[key] = out.get(key, Fraction(0)) + va * vb
        return ConstCombo(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, e: int) -> ConstCombo:
        out = ConstCombo.rational(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def to_json(self) -> dict[str, str]:
        items = sorted(self._terms.items(), key=lambda kv: (len(kv[0]), _key_to_str(kv[0])))
        return {_key_to_str(k): str(v) for k, v in items}

    @classmethod
    def from_json(cls, data: Mapping[str, str] | str) -> ConstCombo:
        if isinstance(data, str):
            data = json.loads(data)
        return cls({k: Fraction(v) for k, v in data.items()})

    def __repr__(self) -> str:
        if not self._terms:
            return "ConstCombo(0)"
        return "ConstCombo(" + ", ".join(f"{k}: {v}" for k, v in self.to_json().items()) + ")"


def atom(name: str, coeff=1) -> ConstCombo:
    return ConstCombo({(name,): coeff})


# ---------------------------------------------------------------------------
# atom registry

_registry_lock = threading.RLock()
_atoms: dict[str, Callable[[int], mpmath.mpf]] = {}
_patterns: list[tuple[re.Pattern, Callable]] = []
_value_cache: dict[tuple[str, int], mpmath.mpf] = {}


def register_atom(name: str, generator: Callable[[int], mpmath.mpf]) -> None:
    """``generator(prec)`` must return the atom's value correct to ``prec`` bits."""
    with _registry_lock:
        _atoms[name] = generator


def register_atom_pattern(pattern: str, factory: Callable) -> None:
    """``factory(match)`` returns a generator for atoms matching ``pattern``."""
    with _registry_lock:
        _patterns.append((re.compile(pattern + r"\Z"), factory))


def _generator(name: str) -> Callable[[int], mpmath.mpf]:
    with _registry_lock:
        gen = _atoms.get(name)
        if gen is not None:
            return gen
        for pat, factory in _patterns:
            m = pat.match(name)
            if m:
                return factory(m)
    raise UnknownAtomError(name)


def atom_value(name: str, prec: int) -> mpmath.mpf:
    key = (name, prec)
    with _registry_lock:
        if key in _value_cache:
            return _value_cache[key]
    gen = _generator(name)
    with workprec(prec):
        v = +gen(prec)
    with _registry_lock:
        _value_cache[key] = v
    return v


def constcombo_eval(c: ConstCombo, prec: int = 128) -> mpmath.mpf:
    """Numeric value of ``c`` at ``prec`` bits (computed with guard bits, rounded once)."""
    for a in c.atoms():
        _generator(a)  # fail fast with the atom name
    work = prec + GUARD_BITS + 4 * max((len(m) for m in c._terms), default=0)
    with workprec(work):
        total = mpmath.mpf(0)
        for mono, coeff in c._terms.items():
            term = mpmath.mpf(coeff.numerator) / coeff.denominator
            for a in mono:
                term *= atom_value(a, work)
            total += term
    with workprec(prec):
        return +total


# built-in atoms ------------------------------------------------------------

register_atom("log2", lambda p: mpmath.log(2))
register_atom("pi2", lambda p: mpmath.pi ** 2)
register_atom("li4half", lambda p: mpmath.polylog(4, mpmath.mpf(1) / 2))
register_atom("gammaE", lambda p: +mpmath.euler)
register_atom_pattern(r"zeta(\d+)", lambda m: (lambda p, s=int(m.group(1)): mpmath.zeta(s)))


def _stieltjes_factory(m):
    def gen(p, n=int(m.group(1))):
        from harmzeta.numeric import stieltjes_gamma

        return stieltjes_gamma(n, p)

    return gen


def _hz_factory(m):
    def gen(p, a=int(m.group(1)), s=int(m.group(2))):
        from harmzeta.eulersums import harmonic_zeta

        return harmonic_zeta(a, s, p).value

    return gen


def _jz_factory(m):
    def gen(p, a=int(m.group(1)), s=int(m.group(2))):
        from harmzeta.eulersums import alternating_harmonic_zeta

        return alternating_harmonic_zeta(a, s, p).value

    return gen


def _etad_factory(m):
    def gen(p, k=int(m.group(1))):
        from harmzeta.eulersums import eta_derivative_at_zero

        return eta_derivative_at_zero(k, p)

    return gen


register_atom_pattern(r"gamma(\d+)", _stieltjes_factory)
register_atom_pattern(r"HZ(\d+)_(\d+)", _hz_factory)
register_atom_pattern(r"JZ(\d+)_(\d+)", _jz_factory)
register_atom_pattern(r"etad(\d+)", _etad_factory)


def zeta_combo(s: int) -> ConstCombo:
    """zeta(s), s >= 2, in the canonical basis (pi2 powers for even s)."""
    from harmzeta.exact import zeta_even

    if s < 2:
        raise ValueError("zeta_combo needs s >= 2")
    if s % 2 == 0:
        return ConstCombo({("pi2",) * (s // 2): zeta_even(s // 2)})
    return atom(f"zeta{s}")
