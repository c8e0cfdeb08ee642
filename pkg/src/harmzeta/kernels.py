"""Hot double-precision loops.

The compiled extension is used when it was built and importable; setting the
environment variable ``HARMZETA_PURE_PYTHON=1`` forces the Python fallback.
``BACKEND`` records which one is active.
"""

from __future__ import annotations

import os

from harmzeta import _kernels_py

_impl = _kernels_py
BACKEND = "python"

if os.environ.get("HARMZETA_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from harmzeta import _speedups as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py

gap_sum = _impl.gap_sum
skew_sum = _impl.skew_sum
weighted_gap_sum = _impl.weighted_gap_sum
log_weighted_sum = _impl.log_weighted_sum

__all__ = ["BACKEND", "gap_sum", "skew_sum", "weighted_gap_sum", "log_weighted_sum"]
