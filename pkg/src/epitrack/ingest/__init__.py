"""Snapshot ingestion: fetch, parse, normalize, coalesce, repair, publish.

One ingest run is serialized end to end; sources within a run are fetched
concurrently but merged in descriptor order, so the published result is
deterministic. A failed source is recorded and skipped; the run aborts only
when every source fails, leaving the current version untouched.
"""

from __future__ import annotations

import datetime as dt
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import TYPE_CHECKING

from ..errors import FetchError, IngestError, InvalidArgumentError, ParseError
from ..model import DailyRecord, FieldArrays, RawRow, RegionId
from .canonical import parse_canonical_csv, serialize_canonical_csv
from .coalesce import KeptRecord, coalesce_daily
from .dxy import parse_dxy_json
from .normalize import is_quarantined, normalize_region
from .repair import repair_arrays, repair_monotonic
from .sources import SourceDescriptor, fetch_source

if TYPE_CHECKING:
    from ..store import DatasetStore, DatasetVersion

__all__ = [
    "IngestReport",
    "SourceDescriptor",
    "SourceOutcome",
    "coalesce_daily",
    "fetch_source",
    "ingest_snapshot",
    "normalize_region",
    "parse_canonical_csv",
    "parse_dxy_json",
    "repair_monotonic",
    "serialize_canonical_csv",
    "validate_sources",
]


@dataclass
class SourceOutcome:
    kind: str
    location: str
    ok: bool
    rows_parsed: int = 0
    records_skipped: int = 0
    error: str | None = None


@dataclass
class IngestReport:
    version_id: int
    sources: list[SourceOutcome] = field(default_factory=list)
    rows_parsed: int = 0
    rows_skipped: int = 0
    rows_quarantined: int = 0
    value_changes: int = 0
    anomalies: int = 0
    regions: int = 0

    def to_dict(self) -> dict:
        return asdict(self)


def _parse_payload(desc: SourceDescriptor, payload: bytes) -> tuple[list[RawRow], int]:
    if desc.kind == "canonical_csv":
        return parse_canonical_csv(payload), 0
    return parse_dxy_json(payload)


def _fetch_all(descs: list[SourceDescriptor]) -> list[bytes | Exception]:
    def safe_fetch(desc: SourceDescriptor) -> bytes | Exception:
        try:
            return fetch_source(desc)
        except FetchError as exc:
            return exc

    if len(descs) == 1:
        return [safe_fetch(descs[0])]
    with ThreadPoolExecutor(max_workers=min(len(descs), 4)) as pool:
        return list(pool.map(safe_fetch, descs))


def ingest_snapshot(
    descs: list[SourceDescriptor], store: "DatasetStore"
) -> tuple["DatasetVersion", IngestReport]:
    """Run one full ingest against ``store`` and publish the result."""
    # imported here: the store module depends on the canonical CSV format,
    # so the package-level import would be circular
    from ..store import VersionBuilder

    if not descs:
        raise InvalidArgumentError("ingest requires at least one source")

    tables = store.tables
    report = IngestReport(version_id=0)
    rows: list[RawRow] = []
    for desc, payload in zip(descs, _fetch_all(descs)):
        outcome = SourceOutcome(kind=desc.kind, location=desc.location, ok=False)
        report.sources.append(outcome)
        if isinstance(payload, Exception):
            outcome.error = str(payload)
            continue
        try:
            parsed, skipped = _parse_payload(desc, payload)
        except ParseError as exc:
            outcome.error = str(exc)
            continue
        outcome.ok = True
        outcome.rows_parsed = len(parsed)
        outcome.records_skipped = skipped
        report.rows_parsed += len(parsed)
        report.rows_skipped += skipped
        rows.extend(parsed)
    if not any(outcome.ok for outcome in report.sources):
        raise IngestError(
            "all sources failed: "
            + "; ".join(f"{o.location}: {o.error}" for o in report.sources)
        )

    normalized = [(normalize_region(row, tables), row) for row in rows]
    report.rows_quarantined = sum(1 for region, _ in normalized if is_quarantined(region))

    # previous records compete with new rows under the same coalesce rule
    current = store.current()
    merged: dict[tuple[RegionId, dt.date], KeptRecord] = {}
    old: dict[tuple[RegionId, dt.date], DailyRecord] = {}
    for region, series in current.series.items():
        for i, day in enumerate(series.dates):
            record = DailyRecord(day, *series.raw.row(i))
            observed = current.observed.get(
                (region, day), dt.datetime.combine(day, dt.time(), dt.timezone.utc)
            )
            merged[(region, day)] = KeptRecord(observed, record)
            old[(region, day)] = record
    for key, candidate in coalesce_daily(normalized).items():
        kept = merged.get(key)
        if kept is None or candidate.rank > kept.rank:
            merged[key] = candidate

    per_region: dict[RegionId, list[tuple[dt.date, KeptRecord]]] = {}
    for (region, day), kept in merged.items():
        per_region.setdefault(region, []).append((day, kept))

    builder = VersionBuilder()
    for region, entries in per_region.items():
        entries.sort(key=lambda e: e[0])
        dates = tuple(day for day, _ in entries)
        arrays = FieldArrays.from_records([kept.record for _, kept in entries])
        builder.put_series(repair_arrays(region, dates, arrays))
        for day, kept in entries:
            builder.set_observed(region, day, kept.observed_at)
        node: RegionId | None = region
        while node is not None:
            if node not in builder.registry:
                builder.put_meta(tables.meta_for(node))
            node = node.parent

    version = store.publish(builder)
    report.version_id = version.version_id
    report.value_changes = sum(
        1 for key, kept in merged.items() if old.get(key) != kept.record
    )
    report.anomalies = sum(len(s.anomalies) for s in version.series.values())
    report.regions = len(version.series)
    return version, report


def validate_sources(descs: list[SourceDescriptor], tables=None) -> dict:
    """Dry-run parse/normalize for the validate subcommand; publishes nothing."""
    from ..tables import default_tables

    if not descs:
        raise InvalidArgumentError("validate requires at least one source")
    tables = tables if tables is not None else default_tables()
    result: dict = {"sources": [], "errors": [], "rows_parsed": 0, "rows_skipped": 0, "rows_quarantined": 0}
    for desc in descs:
        entry = {"kind": desc.kind, "location": desc.location, "ok": False}
        result["sources"].append(entry)
        try:
            payload = fetch_source(desc)
            parsed, skipped = _parse_payload(desc, payload)
        except (FetchError, ParseError) as exc:
            entry["error"] = str(exc)
            result["errors"].append(f"{desc.location}: {exc}")
            continue
        entry["ok"] = True
        entry["rows_parsed"] = len(parsed)
        entry["records_skipped"] = skipped
        result["rows_parsed"] += len(parsed)
        result["rows_skipped"] += skipped
        result["rows_quarantined"] += sum(
            1 for row in parsed if is_quarantined(normalize_region(row, tables))
        )
    return result
