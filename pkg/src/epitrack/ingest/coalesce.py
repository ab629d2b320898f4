"""Collapse intra-day duplicate reports to one record per region per day.

Feeds publish several times a day; the store keeps the newest report per
UTC calendar day. Ties on the timestamp fall back to the larger counts
(confirmed, then cured, then deaths), which makes the result independent
of input order.
"""

from __future__ import annotations

import datetime as dt
from typing import Iterable, NamedTuple

from ..model import DailyRecord, RawRow, RegionId


class KeptRecord(NamedTuple):
    """The surviving report for one (region, day), with its report time."""

    observed_at: dt.datetime
    record: DailyRecord

    @property
    def rank(self) -> tuple[dt.datetime, int, int, int]:
        return (self.observed_at, *self.record.counts())


def coalesce_daily(
    normalized: Iterable[tuple[RegionId, RawRow]]
) -> dict[tuple[RegionId, dt.date], KeptRecord]:
    best: dict[tuple[RegionId, dt.date], KeptRecord] = {}
    for region, row in normalized:
        day = row.observed_at.astimezone(dt.timezone.utc).date()
        candidate = KeptRecord(
            row.observed_at,
            DailyRecord(day, row.confirmed, row.cured, row.deaths),
        )
        key = (region, day)
        kept = best.get(key)
        if kept is None or candidate.rank > kept.rank:
            best[key] = candidate
    return best
