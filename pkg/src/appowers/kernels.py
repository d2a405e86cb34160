"""Backend selection for the hot counting loops.

The compiled extension is used when it imported successfully and every
intermediate value provably fits in int64; otherwise the exact pure-Python
twin runs.  ``BACKEND`` reports what was picked at import time.
"""
from __future__ import annotations

from . import _accel_py

try:
    from . import _accel  # type: ignore[attr-defined]

    BACKEND = "compiled"
except ImportError:  # extension not built; pure Python everywhere
    _accel = None  # type: ignore[assignment]
    BACKEND = "python"

_INT64_SAFE = 1 << 62


def _fits_int64(k: int, a: int, q: int, N: int) -> bool:
    return k <= 64 and N < _INT64_SAFE and abs(a) + (N + 1) * q < _INT64_SAFE


def scan_progression(k: int, a: int, q: int, N: int) -> tuple[int, int]:
    """(count_t, count_values) for t**k among a+q, ..., a+N*q, by brute-force scan."""
    if _accel is not None and _fits_int64(k, a, q, N):
        return _accel.scan_progression(k, a, q, N)
    return _accel_py.scan_progression(k, a, q, N)


def interval_walk(k: int, a: int, q: int, N: int) -> tuple[int, int]:
    """(count_t, count_values) by walking the kth-root window of the value interval."""
    if _accel is not None and _fits_int64(k, a, q, N):
        return _accel.interval_walk(k, a, q, N)
    return _accel_py.interval_walk(k, a, q, N)
