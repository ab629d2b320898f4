"""Versioned in-memory store with append-only persistence.

A publication atomically replaces the current :class:`DatasetVersion`;
readers keep whatever version they pinned, so reads are repeatable and
never observe partial state. Each published version is appended to the
persistence file as one length-prefixed block:

    u64le block_length
    u64le version_id
    RFC 3339 publication timestamp, LF-terminated
    canonical CSV of every repaired series (observed_at column carries the
    report time kept by intra-day coalescing)

Recovery replays blocks in order; a torn trailing block is ignored. Only
repaired values persist: after a restart the raw history collapses onto
the repaired one and old anomaly flags are no longer reported.
"""

from __future__ import annotations

import datetime as dt
import os
import struct
import threading
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Iterator, Mapping

import numpy as np

from .errors import InvalidArgumentError, NotFoundError, ParseError, ValidationError
from .ingest.canonical import format_timestamp, parse_canonical_csv, serialize_canonical_csv
from .kernels import _numpy as _reference
from .model import CumulativeSeries, FIELDS, FieldArrays, RegionId, RegionMeta
from .tables import BundledTables, default_tables

_EPOCH = dt.datetime(1970, 1, 1, tzinfo=dt.timezone.utc)
_LEN = struct.Struct("<Q")
MAX_SEARCH_RESULTS = 20


@dataclass(frozen=True)
class DatasetVersion:
    """One immutable published snapshot of every series and its registry."""

    version_id: int
    as_of: dt.datetime
    series: Mapping[RegionId, CumulativeSeries]
    registry: Mapping[RegionId, RegionMeta]
    # report time of each kept record; drives re-ingest merging and the
    # observed_at column of persisted blocks
    observed: Mapping[tuple[RegionId, dt.date], dt.datetime]

    def date_range(self) -> tuple[dt.date, dt.date] | None:
        lo: dt.date | None = None
        hi: dt.date | None = None
        for series in self.series.values():
            if not series.dates:
                continue
            if lo is None or series.dates[0] < lo:
                lo = series.dates[0]
            if hi is None or series.dates[-1] > hi:
                hi = series.dates[-1]
        if lo is None or hi is None:
            return None
        return lo, hi

    def latest_date(self) -> dt.date | None:
        rng = self.date_range()
        return rng[1] if rng else None

    def countries(self) -> list[RegionId]:
        return sorted(
            (r for r in self.registry if r.level == 0), key=lambda r: r.sort_key
        )


@dataclass
class VersionBuilder:
    """Mutable staging area handed to :meth:`DatasetStore.publish`."""

    series: dict[RegionId, CumulativeSeries] = field(default_factory=dict)
    registry: dict[RegionId, RegionMeta] = field(default_factory=dict)
    observed: dict[tuple[RegionId, dt.date], dt.datetime] = field(default_factory=dict)

    def put_series(self, series: CumulativeSeries) -> None:
        self.series[series.region] = series

    def put_meta(self, meta: RegionMeta) -> None:
        self.registry[meta.id] = meta

    def set_observed(self, region: RegionId, day: dt.date, at: dt.datetime) -> None:
        self.observed[(region, day)] = at


def _validate_staged(builder: VersionBuilder) -> None:
    """Check every series and hierarchy invariant before publication.

    Uses the pure-numpy reference kernels so the check stays independent of
    whichever backend produced the repaired data.
    """
    for region, meta in builder.registry.items():
        if meta.id != region:
            raise ValidationError(
                f"registry key {region} does not match meta id {meta.id}", region=region
            )
    for region, series in builder.series.items():
        if series.region != region:
            raise ValidationError(
                f"series key {region} does not match series region {series.region}",
                region=region,
            )
        ordinals = series.date_ordinals
        if ordinals.size and np.any(np.diff(ordinals) <= 0):
            bad = int(np.nonzero(np.diff(ordinals) <= 0)[0][0]) + 1
            raise ValidationError(
                f"dates not strictly increasing for {region}",
                region=region,
                date=series.dates[bad],
                field="date",
            )
        flagged = {(a.date, a.field) for a in series.anomalies}
        for name in FIELDS:
            raw_col = series.field_raw(name)
            repaired_col = series.field_repaired(name)
            if raw_col.size and int(raw_col.min()) < 0:
                i = int(np.argmin(raw_col))
                raise ValidationError(
                    f"negative {name} for {region}",
                    region=region,
                    date=series.dates[i],
                    field=name,
                )
            expected = _reference.running_max(raw_col)
            mismatch = np.nonzero(repaired_col != expected)[0]
            if mismatch.size:
                i = int(mismatch[0])
                raise ValidationError(
                    f"repaired {name} is not the running max of raw for {region}",
                    region=region,
                    date=series.dates[i],
                    field=name,
                )
            differs = {
                (series.dates[int(i)], name)
                for i in np.nonzero(expected != raw_col)[0]
            }
            stated = {(d, f) for d, f in flagged if f == name}
            if differs != stated:
                where = (differs ^ stated) or {(None, name)}
                day, _ = sorted(where, key=str)[0]
                raise ValidationError(
                    f"anomaly flags for {name} do not match raw/repaired deltas for {region}",
                    region=region,
                    date=day,
                    field=name,
                )
        if region not in builder.registry:
            raise ValidationError(f"series region {region} missing from registry", region=region)
        ancestor = region.parent
        while ancestor is not None:
            if ancestor not in builder.registry:
                raise ValidationError(
                    f"hierarchy closure violated: {ancestor} (ancestor of {region}) "
                    "missing from registry",
                    region=ancestor,
                )
            ancestor = ancestor.parent


def _iter_serialized_rows(
    version: DatasetVersion,
) -> Iterator[tuple[dt.datetime, str, str | None, str | None, int, int, int]]:
    for region in sorted(version.series, key=lambda r: r.sort_key):
        series = version.series[region]
        for i, day in enumerate(series.dates):
            observed = version.observed.get(
                (region, day), dt.datetime.combine(day, dt.time(), dt.timezone.utc)
            )
            yield (
                observed,
                region.country,
                region.province,
                region.city,
                *series.repaired.row(i),
            )


def serialize_version_series(version: DatasetVersion) -> bytes:
    """Canonical CSV of all repaired series; deterministic row order."""
    return serialize_canonical_csv(_iter_serialized_rows(version))


class DatasetStore:
    """Single-writer, many-reader store of published dataset versions."""

    def __init__(
        self, wal_path: str | Path | None = None, tables: BundledTables | None = None
    ):
        self._tables = tables if tables is not None else default_tables()
        self._wal_path = Path(wal_path) if wal_path is not None else None
        self._write_lock = threading.Lock()
        self._current = DatasetVersion(
            version_id=0,
            as_of=_EPOCH,
            series=MappingProxyType({}),
            registry=MappingProxyType({}),
            observed=MappingProxyType({}),
        )
        if self._wal_path is not None and self._wal_path.exists():
            self._recover()

    @property
    def tables(self) -> BundledTables:
        return self._tables

    def current(self) -> DatasetVersion:
        return self._current

    def publish(self, builder: VersionBuilder) -> DatasetVersion:
        with self._write_lock:
            _validate_staged(builder)
            version = DatasetVersion(
                version_id=self._current.version_id + 1,
                as_of=dt.datetime.now(dt.timezone.utc).replace(microsecond=0),
                series=MappingProxyType(dict(builder.series)),
                registry=MappingProxyType(dict(builder.registry)),
                observed=MappingProxyType(dict(builder.observed)),
            )
            if self._wal_path is not None:
                self._append_block(version)
            self._current = version
            return version

    # -- persistence ----------------------------------------------------

    def _append_block(self, version: DatasetVersion) -> None:
        payload = (
            _LEN.pack(version.version_id)
            + format_timestamp(version.as_of).encode("ascii")
            + b"\n"
            + serialize_version_series(version)
        )
        self._wal_path.parent.mkdir(parents=True, exist_ok=True)
        with open(self._wal_path, "ab") as fh:
            fh.write(_LEN.pack(len(payload)) + payload)
            fh.flush()
            os.fsync(fh.fileno())

    def _recover(self) -> None:
        blob = self._wal_path.read_bytes()
        offset = 0
        last: DatasetVersion | None = None
        while offset + _LEN.size <= len(blob):
            (length,) = _LEN.unpack_from(blob, offset)
            offset += _LEN.size
            if offset + length > len(blob):
                break  # torn trailing block from an interrupted write
            block = blob[offset : offset + length]
            offset += length
            last = self._version_from_block(block)
        if last is not None:
            self._current = last

    def _version_from_block(self, block: bytes) -> DatasetVersion:
        if len(block) < _LEN.size + 2:
            raise ParseError("persistence block too short")
        (version_id,) = _LEN.unpack_from(block, 0)
        rest = block[_LEN.size :]
        newline = rest.index(b"\n")
        as_of_text = rest[:newline].decode("ascii")
        if as_of_text.endswith("Z"):
            as_of_text = as_of_text[:-1] + "+00:00"
        as_of = dt.datetime.fromisoformat(as_of_text)
        rows = parse_canonical_csv(rest[newline + 1 :])

        grouped: dict[RegionId, list] = {}
        observed: dict[tuple[RegionId, dt.date], dt.datetime] = {}
        for row in rows:
            region = RegionId(row.raw_country, row.raw_province, row.raw_city)
            grouped.setdefault(region, []).append(row)
        series_map: dict[RegionId, CumulativeSeries] = {}
        registry: dict[RegionId, RegionMeta] = {}
        for region, region_rows in grouped.items():
            region_rows.sort(key=lambda r: r.observed_at)
            dates = []
            columns = {name: [] for name in FIELDS}
            for row in region_rows:
                day = row.observed_at.date()
                dates.append(day)
                observed[(region, day)] = row.observed_at
                for name in FIELDS:
                    columns[name].append(getattr(row, name))
            arrays = FieldArrays(
                *(np.array(columns[name], dtype=np.int64) for name in FIELDS)
            )
            series_map[region] = CumulativeSeries(
                region=region, dates=tuple(dates), raw=arrays, repaired=arrays
            )
            node: RegionId | None = region
            while node is not None:
                registry.setdefault(node, self._tables.meta_for(node))
                node = node.parent

        builder = VersionBuilder(series=series_map, registry=registry, observed=observed)
        _validate_staged(builder)
        return DatasetVersion(
            version_id=version_id,
            as_of=as_of,
            series=MappingProxyType(series_map),
            registry=MappingProxyType(registry),
            observed=MappingProxyType(observed),
        )


# -- read operations (pure functions over a pinned version) --------------


def get_series(region: RegionId, version: DatasetVersion) -> CumulativeSeries:
    try:
        return version.series[region]
    except KeyError:
        raise NotFoundError(f"no series for region {region}") from None


def children(region: RegionId, version: DatasetVersion) -> list[RegionId]:
    if region not in version.registry:
        raise NotFoundError(f"unknown region {region}")
    return sorted(
        (r for r in version.registry if r.parent == region), key=lambda r: r.sort_key
    )


def resolve_region(query: str, version: DatasetVersion) -> list[tuple[RegionId, str]]:
    """Rank regions by name match: exact, then prefix, then substring."""
    needle = query.strip().casefold()
    if not needle:
        raise InvalidArgumentError("empty search query")

    scored: list[tuple[int, int, tuple[str, str, str], RegionId, str]] = []
    for region, meta in version.registry.items():
        names = {meta.display_name.casefold()} | {a.casefold() for a in meta.aliases}
        if any(n == needle for n in names):
            rank = 0
        elif any(n.startswith(needle) for n in names):
            rank = 1
        elif any(needle in n for n in names):
            rank = 2
        else:
            continue
        series = version.series.get(region)
        latest = int(series.repaired.confirmed[-1]) if series is not None and len(series) else 0
        scored.append((rank, -latest, region.sort_key, region, meta.display_name))
    scored.sort(key=lambda item: item[:3])
    return [(region, name) for _, _, _, region, name in scored[:MAX_SEARCH_RESULTS]]
