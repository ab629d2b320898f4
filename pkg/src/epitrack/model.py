"""Domain types: region identity, daily records, and cumulative series.

A region is identified hierarchically (country -> province -> city). Series
hold one record per reported calendar day, as parallel numpy arrays so the
numeric kernels can run on them directly. ``raw`` is what the feeds said;
``repaired`` is the forward running maximum per field, which restores the
cumulative semantics every derived metric depends on.
"""

from __future__ import annotations

import datetime as dt
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, NamedTuple

import numpy as np

from .errors import InvalidArgumentError

# Count fields carried by every record, in canonical column order.
FIELDS = ("confirmed", "cured", "deaths")

# Synthetic country code collecting rows whose country could not be resolved.
QUARANTINE_COUNTRY = "XX"

_COUNTRY_RE = re.compile(r"[A-Z]{2}")


class Continent(Enum):
    AFRICA = "Africa"
    ASIA = "Asia"
    EUROPE = "Europe"
    NORTH_AMERICA = "NorthAmerica"
    SOUTH_AMERICA = "SouthAmerica"
    OCEANIA = "Oceania"
    OTHER = "Other"


@dataclass(frozen=True, slots=True)
class RegionId:
    """Hierarchical region key; country code plus optional province/city.

    Synthetic two-letter codes (cruise ships, the quarantine bucket) are
    legal country values; the constraint is shape, not ISO membership.
    """

    country: str
    province: str | None = None
    city: str | None = None

    def __post_init__(self) -> None:
        if not _COUNTRY_RE.fullmatch(self.country):
            raise InvalidArgumentError(
                f"country code must be 2 uppercase ASCII letters, got {self.country!r}"
            )
        if self.city is not None and self.province is None:
            raise InvalidArgumentError("city requires a province")
        if self.province == "":
            raise InvalidArgumentError("province must be None or non-empty")
        if self.city == "":
            raise InvalidArgumentError("city must be None or non-empty")

    @property
    def level(self) -> int:
        """0 = country, 1 = province, 2 = city."""
        return (self.province is not None) + (self.city is not None)

    @property
    def parent(self) -> "RegionId | None":
        if self.city is not None:
            return RegionId(self.country, self.province)
        if self.province is not None:
            return RegionId(self.country)
        return None

    @property
    def country_id(self) -> "RegionId":
        return RegionId(self.country)

    @property
    def path(self) -> str:
        parts = [self.country]
        if self.province is not None:
            parts.append(self.province)
        if self.city is not None:
            parts.append(self.city)
        return "/".join(parts)

    @classmethod
    def from_path(cls, path: str) -> "RegionId":
        parts = path.split("/")
        if not 1 <= len(parts) <= 3 or any(p == "" for p in parts):
            raise InvalidArgumentError(f"malformed region path {path!r}")
        return cls(*parts)

    @property
    def sort_key(self) -> tuple[str, str, str]:
        return (self.country, self.province or "", self.city or "")

    def __str__(self) -> str:
        return self.path


@dataclass(frozen=True, slots=True)
class RegionMeta:
    id: RegionId
    display_name: str
    continent: Continent
    population: int | None = None
    aliases: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if not self.display_name:
            raise InvalidArgumentError(f"empty display_name for {self.id}")
        if self.population is not None and self.population <= 0:
            raise InvalidArgumentError(f"population must be positive for {self.id}")


@dataclass(frozen=True, slots=True)
class DailyRecord:
    """Cumulative counts reported for one region on one UTC calendar day."""

    date: dt.date
    confirmed: int
    cured: int
    deaths: int

    def __post_init__(self) -> None:
        for name in FIELDS:
            if getattr(self, name) < 0:
                raise InvalidArgumentError(f"{name} must be >= 0 on {self.date}")

    def counts(self) -> tuple[int, int, int]:
        return (self.confirmed, self.cured, self.deaths)


@dataclass(frozen=True, slots=True)
class AnomalyFlag:
    """One raw-value regression raised by the monotonicity repair."""

    date: dt.date
    field: str
    raw_value: int
    repaired_value: int

    def __post_init__(self) -> None:
        if self.field not in FIELDS:
            raise InvalidArgumentError(f"unknown field {self.field!r}")
        if self.repaired_value <= self.raw_value:
            raise InvalidArgumentError("repairs only raise values")


@dataclass(frozen=True, slots=True)
class RawRow:
    """One parsed upstream report line, prior to normalization."""

    observed_at: dt.datetime
    raw_country: str
    raw_province: str | None
    raw_city: str | None
    confirmed: int
    cured: int
    deaths: int

    def __post_init__(self) -> None:
        if not self.raw_country:
            raise InvalidArgumentError("raw_country must be non-empty")
        for name in FIELDS:
            if getattr(self, name) < 0:
                raise InvalidArgumentError(f"{name} must be >= 0")


class FieldArrays(NamedTuple):
    """Per-field int64 column arrays of equal length."""

    confirmed: np.ndarray
    cured: np.ndarray
    deaths: np.ndarray

    @classmethod
    def from_records(cls, records: list[DailyRecord]) -> "FieldArrays":
        return cls(
            _freeze(np.array([r.confirmed for r in records], dtype=np.int64)),
            _freeze(np.array([r.cured for r in records], dtype=np.int64)),
            _freeze(np.array([r.deaths for r in records], dtype=np.int64)),
        )

    def row(self, i: int) -> tuple[int, int, int]:
        return (int(self.confirmed[i]), int(self.cured[i]), int(self.deaths[i]))


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr, dtype=np.int64)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class CumulativeSeries:
    """Date-ordered raw and repaired counts for one region.

    Dates are strictly increasing; ``repaired`` is per-field non-decreasing
    and equals the running maximum of ``raw``. ``anomalies`` lists exactly
    the (date, field) pairs where the two differ.
    """

    region: RegionId
    dates: tuple[dt.date, ...]
    raw: FieldArrays
    repaired: FieldArrays
    anomalies: tuple[AnomalyFlag, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "date_ordinals",
            _freeze(np.array([d.toordinal() for d in self.dates], dtype=np.int64)),
        )

    def __len__(self) -> int:
        return len(self.dates)

    def field_raw(self, name: str) -> np.ndarray:
        return getattr(self.raw, name)

    def field_repaired(self, name: str) -> np.ndarray:
        return getattr(self.repaired, name)

    def raw_records(self) -> Iterator[DailyRecord]:
        for i, d in enumerate(self.dates):
            yield DailyRecord(d, *self.raw.row(i))

    def repaired_records(self) -> Iterator[DailyRecord]:
        for i, d in enumerate(self.dates):
            yield DailyRecord(d, *self.repaired.row(i))

    def last_repaired(self) -> DailyRecord | None:
        if not self.dates:
            return None
        return DailyRecord(self.dates[-1], *self.repaired.row(-1))

    @classmethod
    def from_clean_records(
        cls, region: RegionId, records: list[DailyRecord]
    ) -> "CumulativeSeries":
        """Build a series whose raw data is already non-decreasing.

        Intended for persistence replay and tests; raises if the input
        would need repair.
        """
        arrays = FieldArrays.from_records(records)
        for name in FIELDS:
            col = getattr(arrays, name)
            if col.size and np.any(np.diff(col) < 0):
                raise InvalidArgumentError(f"{name} decreases; data needs repair")
        return cls(
            region=region,
            dates=tuple(r.date for r in records),
            raw=arrays,
            repaired=arrays,
            anomalies=(),
        )
