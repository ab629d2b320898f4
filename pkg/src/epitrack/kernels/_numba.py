"""Numba-jitted kernel implementations.

Semantics are defined by ``_numpy.py``; these exist because the repair,
delta, and rollup loops run once per region per ingest and dominate the
numeric work. ``cache=True`` persists compiled code next to the package so
the JIT cost is paid once per environment, not once per process.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def running_max(values):
    out = np.empty(values.shape[0], dtype=np.int64)
    best = np.int64(-(2**62))
    for i in range(values.shape[0]):
        v = values[i]
        if v > best:
            best = v
        out[i] = best
    return out


@njit(cache=True, nogil=True)
def deltas(cumulative):
    out = np.empty(cumulative.shape[0], dtype=np.int64)
    prev = np.int64(0)
    for i in range(cumulative.shape[0]):
        out[i] = cumulative[i] - prev
        prev = cumulative[i]
    return out


@njit(cache=True, nogil=True)
def carry_forward_grid(dates, values, grid):
    out = np.zeros(grid.shape[0], dtype=np.int64)
    j = -1
    for g in range(grid.shape[0]):
        while j + 1 < dates.shape[0] and dates[j + 1] <= grid[g]:
            j += 1
        if j >= 0:
            out[g] = values[j]
    return out


@njit(cache=True, nogil=True)
def rollup_grid(starts, dates_flat, values_flat, grid):
    total = np.zeros(grid.shape[0], dtype=np.int64)
    for k in range(starts.shape[0] - 1):
        lo = starts[k]
        hi = starts[k + 1]
        j = lo - 1
        for g in range(grid.shape[0]):
            while j + 1 < hi and dates_flat[j + 1] <= grid[g]:
                j += 1
            if j >= lo:
                total[g] += values_flat[j]
    return total


@njit(cache=True, nogil=True)
def _carry_forward_at(dates, values, at):
    lo, hi = 0, dates.shape[0]
    while lo < hi:
        mid = (lo + hi) // 2
        if dates[mid] <= at:
            lo = mid + 1
        else:
            hi = mid
    if lo == 0:
        return np.int64(0)
    return values[lo - 1]


def carry_forward_at(dates: np.ndarray, values: np.ndarray, at: int) -> int:
    return int(_carry_forward_at(dates, values, np.int64(at)))
