"""Reference tables regenerated from the library, serialized canonically.

* table 1: JZ(2, -n) for n = 0..10 as ConstCombo JSON
* table 2: residues of HZ(m, .) at the points 1, 0, ..., -4 for m = 1..6, as GammaPoly arrays
* table 3: a_n(l) for n = 1..9, l = 1..4

Serialization is ``json.dumps(..., indent=2, sort_keys=True)`` plus a trailing
newline, so regenerated text can be compared byte-for-byte with the golden
files shipped in ``harmzeta/golden``.
"""

from __future__ import annotations

import json
from importlib import resources

from harmzeta.laurent import a_coeff, residue
from harmzeta.negvalues import j2_negative

__all__ = ["TABLE_IDS", "table_data", "table_text", "golden_text", "compare_with_golden"]

TABLE_IDS = (1, 2, 3)
TABLE2_M = range(1, 7)
TABLE2_POINTS = (1, 0, -1, -2, -3, -4)


def table_data(table: int) -> dict:
    if table == 1:
        rows = [{"n": n, "value": j2_negative(n).to_json()} for n in range(11)]
        return {"table": 1, "quantity": "JZ(2, -n)", "rows": rows}
    if table == 2:
        rows = [{"m": m, "point": p, "residue": residue(m, p).to_json()}
                for m in TABLE2_M for p in TABLE2_POINTS]
        return {"table": 2, "quantity": "residue of HZ(m, s) at s = point (ascending powers of gamma)",
                "rows": rows}
    if table == 3:
        rows = [{"n": n, "a": [str(a_coeff(n, l)) for l in range(1, 5)]} for n in range(1, 10)]
        return {"table": 3, "quantity": "a_n(l), l = 1..4", "rows": rows}
    raise ValueError(f"table must be one of {TABLE_IDS}")


def dump(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def table_text(table: int) -> str:
    return dump(table_data(table))


def golden_text(table: int) -> str:
    if table not in TABLE_IDS:
        raise ValueError(f"table must be one of {TABLE_IDS}")
    return resources.files("harmzeta").joinpath("golden", f"table{table}.json").read_text()


def compare_with_golden(table: int) -> bool:
    return table_text(table) == golden_text(table)
