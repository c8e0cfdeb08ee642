"""Hand transcription of the three reference tables, independent of the library.

Entries are written by hand (in terms of zeta(-1), zeta(-3), ..., log 2 and
pi^2) and evaluated here to exact rationals.  Running this file with
``--write`` regenerates ``src/harmzeta/golden/*.json``; the library must then
reproduce those files byte-for-byte.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction as F
from math import comb
from pathlib import Path

GOLDEN = Path(__file__).resolve().parent.parent / "src" / "harmzeta" / "golden"

Z1, Z3, Z5, Z7 = F(-1, 12), F(1, 120), F(-1, 252), F(1, 240)  # zeta(-1), zeta(-3), zeta(-5), zeta(-7)


def _combo(one=0, log2=0, pi2=0, log2sq=0) -> dict:
    terms = {"1": one, "log2": log2, "pi2": pi2, "log2^2": log2sq}
    return {k: str(F(v)) for k, v in terms.items() if v}


# JZ(2, -n), n = 0..10
TABLE1 = [
    _combo(pi2=F(1, 24), log2sq=F(-1, 2)),
    _combo(log2sq=F(1, 4), pi2=F(-1, 48)),
    _combo(log2=F(-1, 4)),
    _combo(pi2=F(1, 96), one=F(-1, 4), log2=F(3, 8), log2sq=F(-1, 8)),
    _combo(one=F(5, 16), log2=F(1, 8)),
    _combo(one=F(23, 32), pi2=F(-1, 48), log2sq=F(1, 4), log2=F(-15, 16)),
    _combo(one=F(-49, 32), log2=F(-1, 4)),
    _combo(one=F(-129, 32), pi2=F(17, 192), log2sq=F(-17, 16), log2=F(147, 32)),
    _combo(one=F(717, 64), log2=F(17, 16)),
    _combo(one=F(4639, 128), pi2=F(-31, 48), log2sq=F(31, 4), log2=F(-1185, 32)),
    _combo(one=F(-7711, 64), log2=F(-31, 4)),
]

# a_n(l), rows n = 1..9, columns l = 1..4
TABLE3 = [
    [F(1, 2), 0, 0, 0],
    [Z1, F(1, 4), 0, 0],
    [0, Z1, F(1, 8), 0],
    [Z3, Z1**2, F(3, 4) * Z1, F(1, 16)],
    [0, Z3, F(3, 2) * Z1**2, F(1, 2) * Z1],
    [Z5, 2 * Z1 * Z3, Z1**3 + F(3, 4) * Z3, F(3, 2) * Z1**2],
    [0, Z5, 3 * Z1 * Z3, 2 * Z1**3 + F(1, 2) * Z3],
    [Z7, 2 * Z1 * Z5 + Z3**2, F(3, 4) * Z5 + 3 * Z1**2 * Z3, Z1**4 + 3 * Z1 * Z3],
    [0, Z7, 3 * Z1 * Z5 + F(3, 2) * Z3**2, F(1, 2) * Z5 + 6 * Z1**2 * Z3],
]


def table2_row(m: int, k: int) -> list[str]:
    """Residue at k as ascending gamma coefficients; each printed entry is gamma^m { sum_j c_j / gamma^j }."""
    # (j, coefficient) pairs: gamma^m * coefficient / gamma^j
    rows = {
        1: [(0, F(1))],
        0: [(1, F(m, 2))],
        -1: [(2, comb(m, 2) * F(1, 4)), (1, comb(m, 1) * Z1)],
        -2: [(3, comb(m, 3) * F(1, 8)), (2, comb(m, 2) * Z1)],
        -3: [(4, comb(m, 4) * F(1, 16)), (3, comb(m, 3) * F(3, 4) * Z1), (2, comb(m, 2) * Z1**2),
             (1, comb(m, 1) * Z3)],
        -4: [(5, comb(m, 5) * F(1, 32)), (4, comb(m, 4) * F(1, 2) * Z1), (3, comb(m, 3) * F(3, 2) * Z1**2),
             (2, comb(m, 2) * Z3)],
    }[k]
    coeffs = [F(0)] * (m + 1)
    for j, c in rows:
        if c:
            coeffs[m - j] += c
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return [str(c) for c in coeffs]


def table_objects() -> dict[int, dict]:
    t1 = {"table": 1, "quantity": "JZ(2, -n)",
          "rows": [{"n": n, "value": v} for n, v in enumerate(TABLE1)]}
    t2 = {"table": 2, "quantity": "residue of HZ(m, s) at s = point (ascending powers of gamma)",
          "rows": [{"m": m, "point": k, "residue": table2_row(m, k)}
                   for m in range(1, 7) for k in (1, 0, -1, -2, -3, -4)]}
    t3 = {"table": 3, "quantity": "a_n(l), l = 1..4",
          "rows": [{"n": n, "a": [str(F(v)) for v in row]} for n, row in enumerate(TABLE3, start=1)]}
    return {1: t1, 2: t2, 3: t3}


def table_texts() -> dict[int, str]:
    return {k: json.dumps(v, indent=2, sort_keys=True) + "\n" for k, v in table_objects().items()}


if __name__ == "__main__":
    if "--write" in sys.argv:
        GOLDEN.mkdir(parents=True, exist_ok=True)
        for k, text in table_texts().items():
            (GOLDEN / f"table{k}.json").write_text(text)
            print(f"wrote {GOLDEN / f'table{k}.json'}")
    else:
        for k, text in table_texts().items():
            print(f"table {k}: {len(text)} bytes")
