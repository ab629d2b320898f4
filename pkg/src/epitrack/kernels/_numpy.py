"""Pure-numpy kernel implementations.

These are the reference semantics; the numba twins in ``_numba.py`` must
match them exactly. All kernels take and return int64 arrays. Date inputs
are proleptic-Gregorian ordinals and must be strictly increasing; callers
validate, kernels assume.
"""

from __future__ import annotations

import numpy as np


def running_max(values: np.ndarray) -> np.ndarray:
    """Forward running maximum (the monotonicity repair)."""
    return np.maximum.accumulate(values.astype(np.int64, copy=True))


def deltas(cumulative: np.ndarray) -> np.ndarray:
    """Day-over-day increments; the first element is the first report."""
    return np.diff(cumulative.astype(np.int64, copy=False), prepend=np.int64(0))


def carry_forward_grid(
    dates: np.ndarray, values: np.ndarray, grid: np.ndarray
) -> np.ndarray:
    """Sample a sparse cumulative series onto a date grid.

    For each grid date: the value at the latest series date <= it, or 0
    before the first series date.
    """
    idx = np.searchsorted(dates, grid, side="right") - 1
    out = np.zeros(grid.shape[0], dtype=np.int64)
    present = idx >= 0
    out[present] = values[idx[present]]
    return out


def rollup_grid(
    starts: np.ndarray,
    dates_flat: np.ndarray,
    values_flat: np.ndarray,
    grid: np.ndarray,
) -> np.ndarray:
    """Sum carry-forward contributions of several children onto a grid.

    Children are packed CSR-style: child k occupies ``starts[k]:starts[k+1]``
    of the flat date/value arrays.
    """
    total = np.zeros(grid.shape[0], dtype=np.int64)
    for k in range(starts.shape[0] - 1):
        lo, hi = starts[k], starts[k + 1]
        total += carry_forward_grid(dates_flat[lo:hi], values_flat[lo:hi], grid)
    return total


def carry_forward_at(dates: np.ndarray, values: np.ndarray, at: int) -> int:
    """Scalar carry-forward lookup: value as of ordinal ``at``, 0 if earlier."""
    idx = int(np.searchsorted(dates, np.int64(at), side="right")) - 1
    return int(values[idx]) if idx >= 0 else 0
