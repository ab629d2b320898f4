"""Aggregate child series into a parent with carry-forward alignment.

The parent's date axis is the union of the children's. On a date a child
does not report, its last earlier value contributes (0 before its first
report). Summing carried non-decreasing series keeps the result
non-decreasing, so the output needs no repair pass.
"""

from __future__ import annotations

import datetime as dt

import numpy as np

from .. import kernels
from ..errors import InvalidArgumentError
from ..model import CumulativeSeries, FIELDS, FieldArrays, RegionId


def rollup(
    children: list[CumulativeSeries], region: RegionId | None = None
) -> CumulativeSeries:
    if not children:
        raise InvalidArgumentError("rollup requires at least one child series")
    if region is None:
        parents = {c.region.parent for c in children}
        only = parents.pop() if len(parents) == 1 else None
        region = only if only is not None else children[0].region

    grid = np.unique(np.concatenate([c.date_ordinals for c in children]))
    lengths = np.array([len(c) for c in children], dtype=np.int64)
    starts = np.concatenate([[0], np.cumsum(lengths)]).astype(np.int64)
    dates_flat = np.concatenate([c.date_ordinals for c in children]).astype(np.int64)

    columns = []
    for name in FIELDS:
        values_flat = np.concatenate(
            [c.field_repaired(name) for c in children]
        ).astype(np.int64)
        total = kernels.rollup_grid(starts, dates_flat, values_flat, grid)
        total.setflags(write=False)
        columns.append(total)

    arrays = FieldArrays(*columns)
    return CumulativeSeries(
        region=region,
        dates=tuple(dt.date.fromordinal(int(o)) for o in grid),
        raw=arrays,
        repaired=arrays,
    )
