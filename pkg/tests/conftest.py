import datetime as dt
from pathlib import Path

import pytest

from epitrack.ingest import SourceDescriptor, ingest_snapshot
from epitrack.store import DatasetStore

FIXTURES = Path(__file__).parent / "fixtures"

WORLD_CSV = FIXTURES / "world_20200410.csv"
DXY_JSON = FIXTURES / "dxy_20200410.json"
BAD_ROWS_CSV = FIXTURES / "bad_rows.csv"

SNAPSHOT_DATE = dt.date(2020, 4, 10)


def snapshot_sources() -> list[SourceDescriptor]:
    return [
        SourceDescriptor("canonical_csv", str(WORLD_CSV)),
        SourceDescriptor("dxy_json", str(DXY_JSON)),
    ]


@pytest.fixture(scope="session")
def fixture_store() -> DatasetStore:
    """A store with both snapshot fixtures ingested once."""
    store = DatasetStore()
    ingest_snapshot(snapshot_sources(), store)
    return store


@pytest.fixture(scope="session")
def fixture_version(fixture_store):
    return fixture_store.current()


@pytest.fixture(scope="session")
def fixture_report():
    store = DatasetStore()
    _version, report = ingest_snapshot(snapshot_sources(), store)
    return report


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        name = report.nodeid.rsplit("::", 1)[-1]
        status = "PASS" if report.passed else "FAIL"
        print(f"\n[acceptance] {status}: {name}")
