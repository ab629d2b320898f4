"""Parser for the aggregated area-record JSON feed.

Each area record describes one province snapshot (Chinese names, cumulative
counts, epoch-millisecond update time) and may nest per-city records that
inherit the parent's timestamp. Records without a usable name or timestamp
are skipped and tallied rather than failing the whole document; missing
counts read as zero.
"""

from __future__ import annotations

import datetime as dt
import json

from ..errors import ParseError
from ..model import RawRow

DEFAULT_COUNTRY = "中国"


def _count(record: dict, key: str) -> int | None:
    value = record.get(key, 0)
    if value is None:
        return 0
    if isinstance(value, bool) or not isinstance(value, int):
        return None
    return value if value >= 0 else None


def parse_dxy_json(data: bytes) -> tuple[list[RawRow], int]:
    """Parse area-record JSON; returns (rows, skipped-record count)."""
    try:
        doc = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ParseError(f"malformed area-record JSON: {exc}") from None
    if isinstance(doc, dict) and isinstance(doc.get("results"), list):
        doc = doc["results"]
    if not isinstance(doc, list):
        raise ParseError("expected a top-level array of area records")

    rows: list[RawRow] = []
    skipped = 0
    for record in doc:
        if not isinstance(record, dict):
            skipped += 1
            continue
        province = record.get("provinceName")
        update_ms = record.get("updateTime")
        if not province or not isinstance(province, str):
            skipped += 1
            continue
        if not isinstance(update_ms, int) or isinstance(update_ms, bool) or update_ms < 0:
            skipped += 1
            continue
        counts = [_count(record, k) for k in ("confirmedCount", "curedCount", "deadCount")]
        if any(c is None for c in counts):
            skipped += 1
            continue
        observed_at = dt.datetime.fromtimestamp(update_ms // 1000, tz=dt.timezone.utc)
        country = record.get("countryName") or DEFAULT_COUNTRY
        rows.append(
            RawRow(
                observed_at=observed_at,
                raw_country=country,
                raw_province=province,
                raw_city=None,
                confirmed=counts[0],
                cured=counts[1],
                deaths=counts[2],
            )
        )
        cities = record.get("cities")
        if not isinstance(cities, list):
            continue
        for city_record in cities:
            if not isinstance(city_record, dict):
                skipped += 1
                continue
            city = city_record.get("cityName")
            if not city or not isinstance(city, str):
                skipped += 1
                continue
            city_counts = [
                _count(city_record, k) for k in ("confirmedCount", "curedCount", "deadCount")
            ]
            if any(c is None for c in city_counts):
                skipped += 1
                continue
            rows.append(
                RawRow(
                    observed_at=observed_at,
                    raw_country=country,
                    raw_province=province,
                    raw_city=city,
                    confirmed=city_counts[0],
                    cured=city_counts[1],
                    deaths=city_counts[2],
                )
            )
    return rows, skipped
