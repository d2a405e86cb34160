"""Pure-Python twins of the compiled kernels in ``_accel``.

Same signatures and semantics, arbitrary precision, used when the extension
is not built or when inputs do not fit the int64 fast path.
"""
from __future__ import annotations

from .intkernel import is_kth_power, kth_power_t_window


def scan_progression(k: int, a: int, q: int, N: int) -> tuple[int, int]:
    """Brute-force scan of a + i*q for i in [1, N]; returns (count_t, count_values)."""
    even = k % 2 == 0
    ct = cv = 0
    for i in range(1, N + 1):
        v = a + i * q
        if is_kth_power(v, k) is None:
            continue
        cv += 1
        ct += 2 if even and v > 0 else 1
    return ct, cv


def interval_walk(k: int, a: int, q: int, N: int) -> tuple[int, int]:
    """Walk the t-window of [a+q, a+N*q], keep t**k = a (mod q); returns (count_t, count_values)."""
    lo, hi = a + q, a + N * q
    ct = cv = 0
    segments = kth_power_t_window(k, lo, hi)
    if k % 2 == 0:
        # walk only t >= 0; -t mirrors every solution with the same value
        if segments:
            A, B = segments[-1]
            for t in range(max(A, 0), B + 1):
                if (t ** k - a) % q == 0:
                    cv += 1
                    ct += 2 if t > 0 else 1
    else:
        for A, B in segments:
            for t in range(A, B + 1):
                if (t ** k - a) % q == 0:
                    ct += 1
                    cv += 1
    return ct, cv
