#!/usr/bin/env python3
"""Benchmark the compiled counting kernels against their pure-Python twins.

Runs both backends on the same (k, a, q, N) workload and prints per-backend
timings plus the speedup.  The two backends must agree cell for cell; any
mismatch aborts.

Usage:
    python3 benchmarks/bench_kernels.py [--q-max 60] [--n 500]
"""
from __future__ import annotations

import argparse
import time

from appowers import _accel_py
from appowers.kernels import BACKEND

try:
    from appowers import _accel
except ImportError:
    _accel = None


def workload(q_max: int, N: int):
    for k in (2, 3, 4):
        for q in range(1, q_max + 1):
            for a in (-q, 1 - q, 0, q - 1, q):
                yield k, a, q, N


def run(mod, fn_name: str, cells) -> tuple[float, list]:
    fn = getattr(mod, fn_name)
    out = []
    start = time.perf_counter()
    for k, a, q, N in cells:
        out.append(fn(k, a, q, N))
    return time.perf_counter() - start, out


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--q-max", type=int, default=60)
    parser.add_argument("--n", type=int, default=500,
                        help="progression length per cell")
    args = parser.parse_args()
    cells = list(workload(args.q_max, args.n))
    print(f"backend selected at import: {BACKEND}")
    print(f"workload: {len(cells)} cells, N={args.n}")
    for fn_name in ("scan_progression", "interval_walk"):
        t_py, r_py = run(_accel_py, fn_name, cells)
        line = f"{fn_name:18s} python {t_py * 1e3:9.1f} ms"
        if _accel is not None:
            t_c, r_c = run(_accel, fn_name, cells)
            if r_c != r_py:
                raise SystemExit(f"backend mismatch in {fn_name}")
            line += f"   compiled {t_c * 1e3:9.1f} ms   speedup {t_py / t_c:6.1f}x"
        else:
            line += "   (compiled extension not built)"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
