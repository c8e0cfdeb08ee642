"""Pure-Python versions of the compiled partial-sum kernels (same arithmetic)."""

from __future__ import annotations

import math

EULER = 0.57721566490153286060651209008240243


class _Neumaier:
    __slots__ = ("s", "c")

    def __init__(self):
        self.s = 0.0
        self.c = 0.0

    def add(self, x: float) -> None:
        s = self.s
        t = s + x
        if abs(s) >= abs(x):
            self.c += (s - t) + x
        else:
            self.c += (x - t) + s
        self.s = t

    @property
    def value(self) -> float:
        return self.s + self.c


def _harmonics(N: int):
    h = _Neumaier()
    for n in range(1, N + 1):
        h.add(1.0 / n)
        yield n, h.value


def gap_sum(N: int, m: int) -> float:
    acc = _Neumaier()
    for n, h in _harmonics(N):
        acc.add((h ** m - (math.log(n) + EULER) ** m) / n)
    return acc.value


def skew_sum(N: int, m: int) -> float:
    acc = _Neumaier()
    g = EULER ** m
    for n, h in _harmonics(N):
        acc.add(((h - math.log(n)) ** m - g) / n)
    return acc.value


def weighted_gap_sum(N: int, m: int) -> float:
    acc = _Neumaier()
    for n, h in _harmonics(N):
        acc.add(h ** m * (h - math.log(n) - EULER) / n)
    return acc.value


def log_weighted_sum(N: int, m: int, p: int, s_exp: float) -> float:
    acc = _Neumaier()
    for k, h in _harmonics(N):
        acc.add(h ** m * math.log(k) ** p * k ** (-s_exp))
    return acc.value
