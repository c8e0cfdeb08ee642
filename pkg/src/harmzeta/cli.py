"""Command-line front end: ``harmzeta <subcommand> [flags]``.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
Rationals are printed as "p/q", GammaPoly values as ascending coefficient
arrays and ConstCombo values as {monomial: "p/q"} maps.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable

import mpmath

FORMATS = ("json", "csv", "plain")
_DEFAULTS = {"prec": 128, "order": 10, "format": "json", "seed": 20240601, "out": None}


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# formatting


def fmt_mpf(v, prec: int) -> str:
    """Enough decimal digits for the value to round-trip at ``prec`` bits."""
    return mpmath.nstr(v, math.ceil(prec * math.log10(2)) + 1, min_fixed=-5, max_fixed=5)


def _flatten(v):
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True)
    return v


def render(payload, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    records = payload if isinstance(payload, list) else [payload]
    if not all(isinstance(r, dict) for r in records):
        records = [{"value": payload}]
    if fmt == "csv":
        fields: list[str] = []
        for r in records:
            fields += [k for k in r if k not in fields]
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for r in records:
            w.writerow({k: _flatten(v) for k, v in r.items()})
        return buf.getvalue()
    lines = []
    for r in records:
        lines.append("  ".join(f"{k}={_flatten(v)}" for k, v in r.items()))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# argument helpers


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _int_range(text: str) -> range:
    a, sep, b = text.partition("..")
    try:
        if not sep:
            return range(int(a), int(a) + 1)
        return range(int(a), int(b) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None


def _s_value(text: str):
    try:
        return int(text)
    except ValueError:
        try:
            return mpmath.mpf(text)
        except (ValueError, TypeError):
            raise argparse.ArgumentTypeError(f"expected a real number, got {text!r}") from None


def _common(parser: argparse.ArgumentParser) -> None:
    g = parser.add_argument_group("common options")
    g.add_argument("--prec", type=int, default=argparse.SUPPRESS, help="working precision in bits (default 128)")
    g.add_argument("--order", type=int, default=argparse.SUPPRESS, help="truncation order (default 10)")
    g.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS, help="output format (default json)")
    g.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized sweeps")
    g.add_argument("--out", type=Path, default=argparse.SUPPRESS, help="write output to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="harmzeta", description="Harmonic zeta functions: values, Laurent data and identity checks.")
    _common(p)
    sub = p.add_subparsers(dest="command", metavar="SUBCOMMAND")
    sub.required = True

    def add(name: str, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_, description=help_)
        _common(sp)
        return sp

    sp = add("stieltjes", "generalized harmonic Stieltjes constant gt(m, n); m = 0 gives gamma_n")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)

    sp = add("eulersum", "HZ(m, s) or JZ(m, s) at real s (s > 1, resp. s > 0)")
    sp.add_argument("--kind", choices=("H", "J"), default="H")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--s", type=_s_value, required=True)

    sp = add("sums", "closed-form harmonic series (constant term, solved, skewed, weighted gap, alternating gap)")
    sp.add_argument("--which", choices=("constant", "solved", "skewed", "weighted", "alternating-gap"), required=True)
    sp.add_argument("--m", type=int, required=True)

    sp = add("negval", "JZ(m, -n) at a non-positive integer")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--exact", action="store_true", help="include the exact combination")

    sp = add("residue", "residue of HZ(m, s) at an integer point <= 1")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--point", type=int, required=True)

    sp = add("laurent", "principal-part coefficient of HZ(m, s) at s = point")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--point", type=int, required=True)
    sp.add_argument("--k", type=int, required=True, help="coefficient of (s - point)^(-k)")

    sp = add("tables", "regenerate the reference tables and compare with the golden files")
    sp.add_argument("--regenerate", type=_int_list, default=[1, 2, 3], help="comma-separated table ids")

    sp = add("asymptotic", "residual table of an asymptotic formula")
    sp.add_argument("--family", choices=("harmonic_over_n", "alternating", "plain_power"), required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n-grid", type=_int_list, default=[100, 1000, 10000])

    sp = add("divisor-check", "exact sweep of the c_m(n) divisor identity")
    sp.add_argument("--m-range", type=_int_range, default=range(1, 101))
    sp.add_argument("--k-max", type=int, default=4)

    sp = add("q-check", "truncated check of a q-analog identity")
    sp.add_argument("--identity", choices=("harmonic_q", "theta2", "limit"), required=True)
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--orders", type=_int_list, default=None, help="Q,X (q-order, x-order); 'limit' uses X only")

    add("verify", "run the cross-module identity suite")
    return p


def _config(ns: argparse.Namespace) -> argparse.Namespace:
    for k, v in _DEFAULTS.items():
        if not hasattr(ns, k):
            setattr(ns, k, v)
    if not 16 <= ns.prec <= 8192:
        raise UsageError("--prec must be between 16 and 8192 bits")
    if not 1 <= ns.order <= 64:
        raise UsageError("--order must be between 1 and 64")
    return ns


# ---------------------------------------------------------------------------
# subcommands


def cmd_stieltjes(a) -> tuple[object, int]:
    from harmzeta.eulersums import harmonic_stieltjes_constant
    from harmzeta.numeric import stieltjes_gamma

    if a.m == 0:
        v = stieltjes_gamma(a.n, a.prec)
        return {"m": 0, "n": a.n, "value": fmt_mpf(v, a.prec), "method": "stieltjes"}, 0
    r = harmonic_stieltjes_constant(a.m, a.n, a.prec)
    return {"m": a.m, "n": a.n, "value": fmt_mpf(r.value, a.prec), "method": r.method,
            "error_bound": mpmath.nstr(r.error_bound, 5)}, 0


def cmd_eulersum(a):
    from harmzeta.eulersums import alternating_harmonic_zeta, harmonic_zeta, hz_closed_form, jz_closed_form

    if a.kind == "H":
        r = harmonic_zeta(a.m, a.s, a.prec)
        closed = hz_closed_form(a.m, a.s) if isinstance(a.s, int) else None
    else:
        r = alternating_harmonic_zeta(a.m, a.s, a.prec)
        closed = jz_closed_form(a.m, a.s) if isinstance(a.s, int) else None
    out = {"kind": a.kind, "m": a.m, "s": str(a.s), "value": fmt_mpf(r.value, a.prec),
           "error_bound": mpmath.nstr(r.error_bound, 5), "method": r.method}
    if closed is not None and not _is_self_atom(closed, a.kind, a.m, a.s):
        out["closed_form"] = closed.to_json()
    return out, 0


def _is_self_atom(c, kind: str, m: int, s: int) -> bool:
    return c.to_json() == {f"{'HZ' if kind == 'H' else 'JZ'}{m}_{s}": "1"}


def cmd_sums(a):
    from harmzeta import eulersums as es
    from harmzeta.constants import constcombo_eval

    closed, value = None, None
    if a.which == "constant":
        closed = es.constant_term_closed_form(a.m)
        value = constcombo_eval(closed, a.prec)
    elif a.which == "solved":
        closed, value = es.solved_sum(a.m, a.prec)
    elif a.which == "skewed":
        value = es.skewed_power_sum(a.m, a.prec)
    elif a.which == "weighted":
        value = es.weighted_gap_sum(a.m, a.prec)
    else:
        value = es.alternating_gap_sum(a.m, a.prec)
    out = {"which": a.which, "m": a.m, "value": fmt_mpf(value, a.prec)}
    if closed is not None:
        out["closed_form"] = closed.to_json()
    return out, 0


def cmd_negval(a):
    from harmzeta.negvalues import negval

    r = negval(a.m, a.n, a.prec, exact=a.exact)
    out = {"m": a.m, "n": a.n, "route": r.route}
    if a.exact:
        out["exact"] = r.exact.to_json()
    out["value"] = fmt_mpf(r.numeric, a.prec)
    return out, 0


def cmd_residue(a):
    from harmzeta.laurent import residue

    return residue(a.m, a.point).to_json(), 0


def cmd_laurent(a):
    from harmzeta.laurent import laurent_coeff

    return laurent_coeff(a.m, a.point, a.k).to_json(), 0


def cmd_tables(a):
    from harmzeta.tables import TABLE_IDS, golden_text, table_text

    bad = [t for t in a.regenerate if t not in TABLE_IDS]
    if bad:
        raise UsageError(f"unknown table id(s) {bad}; choose from {list(TABLE_IDS)}")
    records, status = [], 0
    for t in a.regenerate:
        text = table_text(t)
        same = text == golden_text(t)
        status |= 0 if same else 1
        rec = {"table": t, "identical_to_golden": same, "bytes": len(text.encode())}
        if a.out is not None:
            a.out.mkdir(parents=True, exist_ok=True)
            path = a.out / f"table{t}.json"
            path.write_text(text)
            rec["written"] = str(path)
        records.append(rec)
    return records, status


def cmd_asymptotic(a):
    from harmzeta.asymptotics import residual_table

    if any(N < 1 for N in a.n_grid) or not a.n_grid:
        raise UsageError("--n-grid needs positive integers")
    rows = residual_table(a.family, a.m, a.n_grid, a.prec)
    mags = [abs(r) for _, r in rows]
    decreasing = all(b < a_ for a_, b in zip(mags, mags[1:]))
    return [{"family": a.family, "m": a.m, "N": N, "residual": mpmath.nstr(r, 12),
             "decreasing_so_far": decreasing} for N, r in rows], 0


def cmd_divisor_check(a):
    from harmzeta.arith import MAX_K, MAX_M, cm_identity_sweep

    if a.m_range.start < 1 or a.m_range.stop - 1 > MAX_M:
        raise UsageError(f"--m-range must lie in 1..{MAX_M}")
    if not 0 <= a.k_max <= MAX_K:
        raise UsageError(f"--k-max must be in 0..{MAX_K}")
    failures = cm_identity_sweep(a.m_range, a.k_max)
    out = {"m_range": f"{a.m_range.start}..{a.m_range.stop - 1}", "k_max": a.k_max,
           "checked": len(a.m_range) * (a.k_max + 1), "pass": not failures,
           "counterexamples": [c.to_json() for c in failures]}
    return out, 0 if not failures else 1


def cmd_q_check(a):
    from harmzeta.arith import q_identity_check, q_limit_check

    if a.identity == "limit":
        X = a.orders[-1] if a.orders else 8
        r = q_limit_check(a.n, X)
    else:
        Q, X = (a.orders + a.orders)[:2] if a.orders else (12, 12)
        r = q_identity_check(a.identity, a.n, Q, X)
    return r.to_json(), 0 if r.passed else 1


# ---------------------------------------------------------------------------
# verify


def _verify_checks(a) -> list[tuple[str, Callable[[], bool]]]:
    from harmzeta import arith, asymptotics, laurent, negvalues, series, tables
    from harmzeta.constants import constcombo_eval
    from harmzeta.eulersums import alternating_harmonic_zeta
    from harmzeta.numeric import euler_transform_sum, harmonic_number, to_mpf, workprec

    order = a.order
    rng = random.Random(a.seed)

    def table3_two_routes() -> bool:
        f = laurent.f_series(9)
        return all(series.series_pow(f, l)[n] == laurent.a_coeff(n, l) for l in range(1, 5) for n in range(1, 10))

    def cauchy_random() -> bool:
        def seq():
            return [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(order + 1)]
        return all(series.cauchy_relation_check(seq(), seq(), rng.randint(0, 4), order) for _ in range(10))

    def j_at_zero_abel() -> bool:
        prec = 64
        for m in range(1, 4):
            exact = constcombo_eval(negvalues.j_value_at_zero(m), prec)
            with workprec(prec):
                r = euler_transform_sum(lambda k, m=m: to_mpf(harmonic_number(k) ** m) * (1 if k % 2 else -1),
                                        mpmath.ldexp(1, -50), prec=prec)
                if abs(r.value - exact) > mpmath.mpf(10) ** -12:
                    return False
        return True

    def negval_routes() -> bool:
        return all(negvalues.j2_negative(k) == negvalues.jm_negative_exact(2, k)
                   and negvalues.j3_negative(k) == negvalues.jm_negative_exact(3, k)
                   and negvalues.j1_negative(k) == negvalues.jm_negative_exact(1, k) for k in range(9))

    def j_positive_registry() -> bool:
        from harmzeta.eulersums import jz_closed_form
        return all(abs(alternating_harmonic_zeta(m, s, 96).value - constcombo_eval(jz_closed_form(m, s), 96)) < 1e-25
                   for m, s in ((1, 1), (1, 2), (2, 1)))

    return [
        ("table1-golden", lambda: tables.compare_with_golden(1)),
        ("table2-golden", lambda: tables.compare_with_golden(2)),
        ("table3-golden", lambda: tables.compare_with_golden(3)),
        ("table3-series-route", table3_two_routes),
        ("residue-ladder", lambda: bool(laurent.residue_recursion_check(4, 8))),
        ("laurent-genfn", lambda: all(laurent.laurent_genfn_check(m, k, order) for m in range(1, 5) for k in range(m))),
        ("pole-orders", lambda: all(laurent.laurent_coeff(m, p, k).value == 0
                                    for m in range(4) for p in range(1, -7, -1)
                                    for k in range(laurent.pole_order(m, p) + 1, m + 2) if k >= 1)),
        ("master-relation", lambda: all(series.master_relation_check(lambda n, e=e: harmonic_number(n) ** e if n else Fraction(0), k, order)
                                        for e in range(1, 5) for k in range(4))),
        ("cauchy-relation", cauchy_random),
        ("negval-routes", negval_routes),
        ("j-at-zero-abel", j_at_zero_abel),
        ("jz-registry", j_positive_registry),
        ("alternating-constant", lambda: all(asymptotics.asymptotic_formula("alternating", m).constant_part
                                             == negvalues.j_value_at_zero(m) for m in range(1, 4))),
        ("plain-power-exact", lambda: all(r == 0 for M in (1, 2)
                                          for _, r in asymptotics.residual_table("plain_power", M, (10, 50, 100)))),
        ("cm-identity", lambda: not arith.cm_identity_sweep(range(1, 301), 6)),
        ("cm-partial-sum", lambda: all(arith.cm_partial_sum_identity_check(n) for n in range(2, 101))),
        ("q-harmonic", lambda: all(arith.q_identity_check("harmonic_q", n, 8, 8) for n in range(3))),
        ("q-theta2", lambda: all(arith.q_identity_check("theta2", n, 8, 8) for n in range(3))),
        ("q-limit", lambda: all(arith.q_limit_check(n, 8) for n in range(4))),
    ]


def cmd_verify(a):
    records, status = [], 0
    for name, check in _verify_checks(a):
        try:
            ok, err = bool(check()), None
        except Exception as exc:  # a crashing check is a failed check
            ok, err = False, f"{type(exc).__name__}: {exc}"
        rec = {"check": name, "pass": ok}
        if err:
            rec["error"] = err
        records.append(rec)
        status |= 0 if ok else 1
    return records, status


COMMANDS: dict[str, Callable] = {
    "stieltjes": cmd_stieltjes,
    "eulersum": cmd_eulersum,
    "sums": cmd_sums,
    "negval": cmd_negval,
    "residue": cmd_residue,
    "laurent": cmd_laurent,
    "tables": cmd_tables,
    "asymptotic": cmd_asymptotic,
    "divisor-check": cmd_divisor_check,
    "q-check": cmd_q_check,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        ns = _config(ns)
        payload, status = COMMANDS[ns.command](ns)
    except (UsageError, ValueError) as exc:
        print(f"harmzeta {ns.command}: error: {exc}", file=sys.stderr)
        return 2
    text = render(payload, ns.format)
    if ns.out is not None and ns.command != "tables":
        Path(ns.out).write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
