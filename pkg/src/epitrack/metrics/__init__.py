"""Derived metrics over published dataset versions.

Everything here is a pure function of an immutable version plus arguments,
so results are repeatable and safe to compute concurrently.
"""

from .compare import (
    CARRY_METRICS,
    ComparisonTable,
    MAX_COMPARE_REGIONS,
    METRICS,
    POINT_METRICS,
    compare,
    continent_groups,
    top_k,
)
from .derive import DerivedPoint, derive_series, effective_series
from .rollup import rollup
from .snapshot import (
    MapEntry,
    MapSnapshot,
    WorldSummary,
    bucket_for,
    map_snapshot,
    world_summary,
)

__all__ = [
    "CARRY_METRICS",
    "ComparisonTable",
    "DerivedPoint",
    "MAX_COMPARE_REGIONS",
    "METRICS",
    "MapEntry",
    "MapSnapshot",
    "POINT_METRICS",
    "WorldSummary",
    "bucket_for",
    "compare",
    "continent_groups",
    "derive_series",
    "effective_series",
    "map_snapshot",
    "rollup",
    "top_k",
    "world_summary",
]
