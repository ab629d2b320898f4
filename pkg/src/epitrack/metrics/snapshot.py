"""World summary and the choropleth map snapshot."""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass

from .. import kernels
from ..model import QUARANTINE_COUNTRY, RegionId
from ..store import DatasetVersion
from .derive import effective_series

MAX_BUCKET = 7


@dataclass(frozen=True, slots=True)
class WorldSummary:
    countries_affected: int
    total_confirmed: int
    total_cured: int
    total_deaths: int
    total_active: int


@dataclass(frozen=True, slots=True)
class MapEntry:
    country: RegionId
    confirmed: int
    bucket: int


@dataclass(frozen=True, slots=True)
class MapSnapshot:
    date: dt.date
    entries: tuple[MapEntry, ...]
    totals: WorldSummary


def bucket_for(confirmed: int) -> int:
    """Log10 color bucket: 0 for none, 1 for 1-9, ... 7 for a million up."""
    if confirmed <= 0:
        return 0
    return min(len(str(confirmed)), MAX_BUCKET)


def _country_values(version: DatasetVersion, day: dt.date) -> dict[RegionId, tuple[int, int, int]]:
    """Carry-forward (confirmed, cured, deaths) per country, quarantine excluded."""
    ordinal = day.toordinal()
    values: dict[RegionId, tuple[int, int, int]] = {}
    for country in version.countries():
        if country.country == QUARANTINE_COUNTRY:
            continue
        series = effective_series(version, country)
        if series is None or not len(series):
            values[country] = (0, 0, 0)
            continue
        values[country] = (
            kernels.carry_forward_at(series.date_ordinals, series.repaired.confirmed, ordinal),
            kernels.carry_forward_at(series.date_ordinals, series.repaired.cured, ordinal),
            kernels.carry_forward_at(series.date_ordinals, series.repaired.deaths, ordinal),
        )
    return values


def _summarize(values: dict[RegionId, tuple[int, int, int]]) -> WorldSummary:
    confirmed = cured = deaths = affected = 0
    for conf, cure, dead in values.values():
        confirmed += conf
        cured += cure
        deaths += dead
        if conf > 0:
            affected += 1
    return WorldSummary(
        countries_affected=affected,
        total_confirmed=confirmed,
        total_cured=cured,
        total_deaths=deaths,
        total_active=max(confirmed - cured - deaths, 0),
    )


def world_summary(version: DatasetVersion, day: dt.date) -> WorldSummary:
    """Totals across all non-quarantine countries as of ``day``.

    Dates before all data simply yield zeros; dates after the last report
    carry the final values forward.
    """
    return _summarize(_country_values(version, day))


def map_snapshot(version: DatasetVersion, day: dt.date) -> MapSnapshot:
    values = _country_values(version, day)
    entries = tuple(
        MapEntry(country=country, confirmed=conf, bucket=bucket_for(conf))
        for country, (conf, _cure, _dead) in sorted(
            values.items(), key=lambda kv: kv[0].sort_key
        )
    )
    return MapSnapshot(date=day, entries=entries, totals=_summarize(values))
