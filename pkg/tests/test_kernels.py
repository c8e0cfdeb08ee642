import os
import subprocess
import sys

import mpmath
import pytest

from harmzeta import _kernels_py, kernels

try:
    from harmzeta import _speedups
except ImportError:
    _speedups = None

CASES = [("gap_sum", (2,)), ("skew_sum", (3,)), ("weighted_gap_sum", (1,)), ("log_weighted_sum", (2, 1, 1.0)),
         ("log_weighted_sum", (1, 2, 2.5))]


def _reference(name, N, args):
    with mpmath.workprec(120):
        g = +mpmath.euler
        total, H = mpmath.mpf(0), mpmath.mpf(0)
        for n in range(1, N + 1):
            H += mpmath.mpf(1) / n
            L = mpmath.log(n)
            if name == "gap_sum":
                total += (H ** args[0] - (L + g) ** args[0]) / n
            elif name == "skew_sum":
                total += ((H - L) ** args[0] - g ** args[0]) / n
            elif name == "weighted_gap_sum":
                total += H ** args[0] * (H - L - g) / n
            else:
                m, p, s = args
                total += H**m * L**p * mpmath.mpf(n) ** (-s)
        return total


@pytest.mark.parametrize("name,args", CASES)
def test_python_kernel_against_mpmath(name, args):
    ref = _reference(name, 3000, args)
    got = getattr(_kernels_py, name)(3000, *args)
    assert abs(got - ref) <= 1e-12 * max(1, abs(ref))


@pytest.mark.skipif(_speedups is None, reason="compiled extension not built")
@pytest.mark.parametrize("name,args", CASES)
def test_backends_agree(name, args):
    py = getattr(_kernels_py, name)(20000, *args)
    cy = getattr(_speedups, name)(20000, *args)
    assert abs(py - cy) <= 1e-13 * max(1, abs(py))


def test_backend_name():
    assert kernels.BACKEND in ("python", "cython")
    if _speedups is not None and os.environ.get("HARMZETA_PURE_PYTHON", "") not in ("1", "true", "yes"):
        assert kernels.BACKEND == "cython"


def test_pure_python_switch():
    env = dict(os.environ, HARMZETA_PURE_PYTHON="1")
    proc = subprocess.run([sys.executable, "-c", "from harmzeta import kernels; print(kernels.BACKEND)"],
                          capture_output=True, text=True, env=env, timeout=60)
    assert proc.stdout.strip() == "python"
