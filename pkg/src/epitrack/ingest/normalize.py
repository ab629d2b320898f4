"""Raw region names -> canonical region ids.

Total by design: a row never fails normalization. Unknown countries land in
the quarantine bucket (one sub-entry per distinct raw name, so the audit
trail survives); unknown province/city names pass through as their own
canonical names after sanitization.
"""

from __future__ import annotations

from ..model import QUARANTINE_COUNTRY, RawRow, RegionId
from ..tables import BundledTables, sanitize_name


def normalize_region(row: RawRow, tables: BundledTables) -> RegionId:
    base = tables.lookup_country(row.raw_country)
    if base is None:
        name = sanitize_name(row.raw_country) or "Unknown"
        return RegionId(QUARANTINE_COUNTRY, name)

    country, province, city = base
    for component in (row.raw_province, row.raw_city):
        if component is None or not component.strip():
            continue
        if province is None:
            province = tables.lookup_province(country, component)
        elif city is None:
            city = tables.lookup_city(country, province, component)
        # deeper components than city have nowhere to go; drop them
    return RegionId(country, province, city)


def is_quarantined(region: RegionId) -> bool:
    return region.country == QUARANTINE_COUNTRY
