"""Kernel selection: compiled coset-table scanner if built, else pure Python.

Set KNOTCERT_PURE=1 to force the pure-Python kernel (useful for
benchmarking and for debugging the compiled twin).
"""

from __future__ import annotations

import os

from . import _coset_py

if os.environ.get("KNOTCERT_PURE"):
    _impl = _coset_py
    BACKEND = "python"
else:
    try:
        from . import _coset_c as _impl  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        _impl = _coset_py
        BACKEND = "python"

hlt_enumerate = _impl.hlt_enumerate


def backend() -> str:
    """Which coset kernel is active: "c" (compiled) or "python"."""
    return BACKEND
