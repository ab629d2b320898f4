"""Multi-region comparison tables, top-k ranking, and continent grouping."""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass

import numpy as np

from ..errors import InvalidArgumentError, NotFoundError
from ..model import Continent, QUARANTINE_COUNTRY, RegionId
from ..store import DatasetVersion
from .derive import DerivedPoint, derive_series, effective_series

MAX_COMPARE_REGIONS = 10

# metric id -> DerivedPoint attribute. Cumulative metrics carry their last
# value across missing days; point metrics (dailies, rates, per-capita) are
# absent on days without a report.
CARRY_METRICS = {
    "total_confirmed": "confirmed",
    "cured": "cured",
    "deaths": "deaths",
    "active": "active",
}
POINT_METRICS = {
    "daily_confirmed": "daily_confirmed",
    "daily_cured": "daily_cured",
    "daily_deaths": "daily_deaths",
    "mortality_rate": "mortality_rate",
    "cure_rate": "cure_rate",
    "per_million": "per_million",
}
METRICS = {**CARRY_METRICS, **POINT_METRICS}


@dataclass(frozen=True, slots=True)
class ComparisonTable:
    metric: str
    regions: tuple[RegionId, ...]
    dates: tuple[dt.date, ...]
    values: tuple[tuple[int | float | None, ...], ...]


def _metric_attr(metric: str) -> str:
    try:
        return METRICS[metric]
    except KeyError:
        raise InvalidArgumentError(
            f"unknown metric {metric!r}; expected one of {sorted(METRICS)}"
        ) from None


def _region_row(
    version: DatasetVersion,
    region: RegionId,
    metric: str,
    days: list[dt.date],
) -> tuple[int | float | None, ...]:
    attr = _metric_attr(metric)
    series = effective_series(version, region)
    points: list[DerivedPoint] = (
        derive_series(series, version.registry.get(region)) if series is not None else []
    )
    if not points:
        return tuple(None for _ in days)
    ordinals = np.array([p.date.toordinal() for p in points], dtype=np.int64)
    wanted = np.array([d.toordinal() for d in days], dtype=np.int64)
    if metric in CARRY_METRICS:
        idx = np.searchsorted(ordinals, wanted, side="right") - 1
        return tuple(
            getattr(points[int(i)], attr) if i >= 0 else None for i in idx
        )
    exact = np.searchsorted(ordinals, wanted, side="left")
    return tuple(
        getattr(points[int(i)], attr)
        if i < len(points) and ordinals[i] == wanted[j]
        else None
        for j, i in enumerate(exact)
    )


def compare(
    version: DatasetVersion,
    regions: list[RegionId],
    metric: str,
    from_day: dt.date,
    to_day: dt.date,
) -> ComparisonTable:
    """Metric values per region over every calendar day in [from, to]."""
    if not 1 <= len(regions) <= MAX_COMPARE_REGIONS:
        raise InvalidArgumentError(
            f"compare takes 1..{MAX_COMPARE_REGIONS} regions, got {len(regions)}"
        )
    _metric_attr(metric)
    if from_day > to_day:
        raise InvalidArgumentError(f"from {from_day} is after to {to_day}")
    for region in regions:
        if region not in version.registry:
            raise NotFoundError(f"unknown region {region}")

    days = [
        from_day + dt.timedelta(days=i) for i in range((to_day - from_day).days + 1)
    ]
    return ComparisonTable(
        metric=metric,
        regions=tuple(regions),
        dates=tuple(days),
        values=tuple(_region_row(version, r, metric, days) for r in regions),
    )


def top_k(
    version: DatasetVersion, metric: str, day: dt.date, k: int
) -> list[tuple[RegionId, int | float | None]]:
    """Countries ranked by metric value (descending) as of ``day``."""
    if k < 1:
        raise InvalidArgumentError(f"k must be >= 1, got {k}")
    _metric_attr(metric)
    countries = [
        c for c in version.countries() if c.country != QUARANTINE_COUNTRY
    ]
    valued = [
        (country, _region_row(version, country, metric, [day])[0])
        for country in countries
    ]
    valued.sort(
        key=lambda item: (
            item[1] is None,
            -(item[1] if item[1] is not None else 0),
            item[0].sort_key,
        )
    )
    return valued[:k]


def continent_groups(version: DatasetVersion) -> dict[Continent, list[RegionId]]:
    """Registered countries grouped by continent; quarantine excluded."""
    groups: dict[Continent, list[RegionId]] = {}
    for country in version.countries():
        if country.country == QUARANTINE_COUNTRY:
            continue
        meta = version.registry[country]
        groups.setdefault(meta.continent, []).append(country)
    return groups
