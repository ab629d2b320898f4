"""Monotonicity repair: forward running maximum per count field.

Cumulative feeds regress when upstream reclassifies cases. The repair never
rewrites earlier history and never lowers a value; every raised value is
recorded as an anomaly flag so the raw data stays auditable.
"""

from __future__ import annotations

import datetime as dt

import numpy as np

from .. import kernels
from ..errors import InvalidArgumentError
from ..model import (
    AnomalyFlag,
    CumulativeSeries,
    DailyRecord,
    FIELDS,
    FieldArrays,
    RegionId,
)


def repair_arrays(
    region: RegionId, dates: tuple[dt.date, ...], raw: FieldArrays
) -> CumulativeSeries:
    """Build a repaired series from date-ordered raw arrays."""
    ordinals = [d.toordinal() for d in dates]
    if any(b <= a for a, b in zip(ordinals, ordinals[1:])):
        raise InvalidArgumentError(f"dates not strictly increasing for {region}")

    repaired_cols = []
    anomalies: list[AnomalyFlag] = []
    for name in FIELDS:
        raw_col = getattr(raw, name)
        fixed = kernels.running_max(raw_col)
        fixed.setflags(write=False)
        repaired_cols.append(fixed)
        for i in np.nonzero(fixed != raw_col)[0]:
            anomalies.append(
                AnomalyFlag(
                    date=dates[int(i)],
                    field=name,
                    raw_value=int(raw_col[i]),
                    repaired_value=int(fixed[i]),
                )
            )
    anomalies.sort(key=lambda a: (a.date, FIELDS.index(a.field)))
    return CumulativeSeries(
        region=region,
        dates=dates,
        raw=raw,
        repaired=FieldArrays(*repaired_cols),
        anomalies=tuple(anomalies),
    )


def repair_monotonic(
    records: list[DailyRecord], region: RegionId | None = None
) -> tuple[list[DailyRecord], list[AnomalyFlag]]:
    """Record-level repair; idempotent, output pointwise >= input."""
    series = repair_arrays(
        region or RegionId("XX"),
        tuple(r.date for r in records),
        FieldArrays.from_records(records),
    )
    return list(series.repaired_records()), list(series.anomalies)
