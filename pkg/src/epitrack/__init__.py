"""epitrack: ingest pandemic case snapshots, store them versioned, serve metrics."""

from .model import (
    AnomalyFlag,
    Continent,
    CumulativeSeries,
    DailyRecord,
    QUARANTINE_COUNTRY,
    RawRow,
    RegionId,
    RegionMeta,
)

__version__ = "0.1.0"

__all__ = [
    "AnomalyFlag",
    "Continent",
    "CumulativeSeries",
    "DailyRecord",
    "QUARANTINE_COUNTRY",
    "RawRow",
    "RegionId",
    "RegionMeta",
    "__version__",
]
