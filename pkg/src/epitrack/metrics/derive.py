"""Per-day derived metrics for one region's repaired series."""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass

import numpy as np

from .. import kernels
from ..errors import InvalidArgumentError
from ..model import CumulativeSeries, FIELDS, RegionId, RegionMeta
from ..store import DatasetVersion
from .rollup import rollup

PER_MILLION_SCALE = 1_000_000


@dataclass(frozen=True, slots=True)
class DerivedPoint:
    date: dt.date
    confirmed: int
    cured: int
    deaths: int
    daily_confirmed: int
    daily_cured: int
    daily_deaths: int
    active: int
    active_clamped: bool
    mortality_rate: float | None
    cure_rate: float | None
    per_million: float | None


def derive_series(
    series: CumulativeSeries, meta: RegionMeta | None = None
) -> list[DerivedPoint]:
    """Daily deltas, active cases, rates, and per-capita normalization.

    Deltas span reporting gaps: the increment at a present date covers every
    missing day since the previous report. Rates are absent (not zero) while
    confirmed is zero; per-capita is absent without a population.
    """
    for name in FIELDS:
        col = series.field_repaired(name)
        if col.size and np.any(np.diff(col) < 0):
            raise InvalidArgumentError(
                f"{name} decreases; derive_series requires repaired input"
            )

    confirmed = series.repaired.confirmed
    cured = series.repaired.cured
    deaths = series.repaired.deaths
    d_confirmed = kernels.deltas(confirmed)
    d_cured = kernels.deltas(cured)
    d_deaths = kernels.deltas(deaths)
    net = confirmed - cured - deaths
    active = np.maximum(net, 0)
    population = meta.population if meta is not None else None

    points = []
    for i, day in enumerate(series.dates):
        conf = int(confirmed[i])
        points.append(
            DerivedPoint(
                date=day,
                confirmed=conf,
                cured=int(cured[i]),
                deaths=int(deaths[i]),
                daily_confirmed=int(d_confirmed[i]),
                daily_cured=int(d_cured[i]),
                daily_deaths=int(d_deaths[i]),
                active=int(active[i]),
                active_clamped=bool(net[i] < 0),
                mortality_rate=None if conf == 0 else int(deaths[i]) / conf,
                cure_rate=None if conf == 0 else int(cured[i]) / conf,
                per_million=None
                if population is None
                else conf * PER_MILLION_SCALE / population,
            )
        )
    return points


def effective_series(
    version: DatasetVersion, region: RegionId
) -> CumulativeSeries | None:
    """The series metrics should read for a region.

    A region with its own published series uses it directly. A registry-only
    node (an ancestor created by hierarchy closure) is represented by the
    rollup of its children, recursively. Returns None when no data exists
    anywhere below the region.
    """
    series = version.series.get(region)
    if series is not None:
        return series
    if region not in version.registry:
        return None
    child_series = [
        s
        for child in version.registry
        if child.parent == region
        for s in [effective_series(version, child)]
        if s is not None
    ]
    if not child_series:
        return None
    return rollup(sorted(child_series, key=lambda s: s.region.sort_key), region=region)
