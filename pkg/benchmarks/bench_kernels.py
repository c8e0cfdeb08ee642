"""Time the compiled partial-sum kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--n 1000000] [--repeat 3]

Prints one line per kernel with both timings, the speedup and the largest
relative difference between the two results.
"""

from __future__ import annotations

import argparse
import timeit

from harmzeta import _kernels_py

try:
    from harmzeta import _speedups
except ImportError:
    _speedups = None

CASES = [
    ("gap_sum", (2,)),
    ("skew_sum", (2,)),
    ("weighted_gap_sum", (2,)),
    ("log_weighted_sum", (2, 1, 1.0)),
]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=1_000_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _speedups is None:
        print("compiled extension not built; only the Python backend is available")
    print(f"{'kernel':<18}{'python s':>12}{'cython s':>12}{'speedup':>10}{'rel diff':>12}")
    for name, extra in CASES:
        py = getattr(_kernels_py, name)
        t_py = min(timeit.repeat(lambda: py(args.n, *extra), number=1, repeat=args.repeat))
        v_py = py(args.n, *extra)
        if _speedups is None:
            print(f"{name:<18}{t_py:>12.4f}{'-':>12}{'-':>10}{'-':>12}")
            continue
        cy = getattr(_speedups, name)
        t_cy = min(timeit.repeat(lambda: cy(args.n, *extra), number=1, repeat=args.repeat))
        v_cy = cy(args.n, *extra)
        rel = abs(v_py - v_cy) / max(abs(v_py), 1e-300)
        print(f"{name:<18}{t_py:>12.4f}{t_cy:>12.4f}{t_py / t_cy:>10.1f}{rel:>12.2e}")


if __name__ == "__main__":
    main()
