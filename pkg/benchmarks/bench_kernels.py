#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Generates a synthetic workload shaped like the real one (many regions,
daily cumulative counts) and times each kernel on both backends.

    python benchmarks/bench_kernels.py --series 2000 --days 400 --repeat 5
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from epitrack.kernels import _numba, _numpy

BACKENDS = {"numpy": _numpy, "numba": _numba}


def make_workload(rng: np.random.Generator, n_series: int, n_days: int):
    steps = rng.integers(0, 500, size=(n_series, n_days), dtype=np.int64)
    cumulative = np.cumsum(steps, axis=1)
    # sprinkle regressions so running_max has real work
    dips = rng.random(size=cumulative.shape) < 0.02
    raw = np.where(dips, cumulative // 2, cumulative)
    date_grid = np.arange(n_days, dtype=np.int64)
    return raw, date_grid


def bench(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--series", type=int, default=2000, help="number of regions")
    parser.add_argument("--days", type=int, default=400, help="days per region")
    parser.add_argument("--repeat", type=int, default=5, help="timing repeats (best wins)")
    args = parser.parse_args()

    rng = np.random.default_rng(20200410)
    raw, grid = make_workload(rng, args.series, args.days)
    rows = [np.ascontiguousarray(raw[i]) for i in range(args.series)]

    # rollup input: every series is a child over the same packed layout
    starts = np.arange(0, (args.series + 1) * args.days, args.days, dtype=np.int64)
    dates_flat = np.tile(grid, args.series)
    values_flat = np.maximum.accumulate(raw, axis=1).reshape(-1)

    cases = {
        "running_max (per series)": lambda backend: [
            backend.running_max(row) for row in rows
        ],
        "deltas (per series)": lambda backend: [backend.deltas(row) for row in rows],
        "carry_forward_grid (per series)": lambda backend: [
            backend.carry_forward_grid(grid, row, grid) for row in rows
        ],
        "rollup_grid (all series)": lambda backend: backend.rollup_grid(
            starts, dates_flat, values_flat, grid
        ),
    }

    # trigger JIT compilation outside the timed region
    for case in cases.values():
        case(_numba)

    print(f"workload: {args.series} series x {args.days} days, best of {args.repeat}")
    print(f"{'kernel':34} {'numpy':>10} {'numba':>10} {'speedup':>9}")
    for name, case in cases.items():
        timings = {
            backend_name: bench(lambda b=backend: case(b), args.repeat)
            for backend_name, backend in BACKENDS.items()
        }
        ratio = timings["numpy"] / timings["numba"] if timings["numba"] else float("inf")
        print(
            f"{name:34} {timings['numpy'] * 1e3:9.2f}ms {timings['numba'] * 1e3:9.2f}ms {ratio:8.2f}x"
        )


if __name__ == "__main__":
    main()
