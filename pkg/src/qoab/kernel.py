"""Backend selection for the feasibility kernel.

The compiled extension ``qoab._kernel`` is used when it was built; otherwise
the pure-Python module is used.  Setting ``QOAB_PURE_PYTHON=1`` forces the
fallback, which is how the test-suite and the benchmark compare the two.
"""

from __future__ import annotations

import os

from . import _kernel_py

if os.environ.get("QOAB_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernel_py
    BACKEND = "python"
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernel_py
        BACKEND = "python"

lp_feasible = _impl.lp_feasible
branch_and_bound = _impl.branch_and_bound

__all__ = ["BACKEND", "lp_feasible", "branch_and_bound"]
