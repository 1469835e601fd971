"""Kernel selection: compiled ``_ckernels`` when importable, else ``_pykernels``.

Set ``STARPCG_PURE=1`` to force the pure-Python kernels.
"""
import os

from . import _pykernels

EXHAUSTED = _pykernels.EXHAUSTED
STOPPED = _pykernels.STOPPED
OVER_BUDGET = _pykernels.OVER_BUDGET

_compiled = None
if not os.environ.get("STARPCG_PURE"):
    try:
        from . import _ckernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"
_impl = _compiled if _compiled is not None else _pykernels

enumerate_slots = _impl.enumerate_slots
grid_scan = _impl.grid_scan


def backends() -> dict:
    """Every available implementation by name, for benchmarks and parity tests."""
    out = {"python": _pykernels}
    if _compiled is not None:
        out["compiled"] = _compiled
    return out
