import datetime as dt
import random

from hypothesis import given
from hypothesis import strategies as st

from epitrack.ingest import coalesce_daily
from epitrack.model import RawRow, RegionId

UTC = dt.timezone.utc
IT = RegionId("IT")


def row(hour, confirmed, day=10, cured=0, deaths=0, minute=0):
    return RawRow(
        observed_at=dt.datetime(2020, 4, day, hour, minute, tzinfo=UTC),
        raw_country="Italy",
        raw_province=None,
        raw_city=None,
        confirmed=confirmed,
        cured=cured,
        deaths=deaths,
    )


def test_latest_report_wins():
    kept = coalesce_daily([(IT, row(8, 5)), (IT, row(20, 7))])
    record = kept[(IT, dt.date(2020, 4, 10))].record
    assert record.confirmed == 7


def test_latest_wins_even_with_smaller_counts():
    kept = coalesce_daily([(IT, row(8, 9)), (IT, row(20, 7))])
    assert kept[(IT, dt.date(2020, 4, 10))].record.confirmed == 7


def test_different_days_kept_separately():
    kept = coalesce_daily([(IT, row(8, 5, day=9)), (IT, row(8, 7, day=10))])
    assert len(kept) == 2
    assert kept[(IT, dt.date(2020, 4, 9))].record.confirmed == 5
    assert kept[(IT, dt.date(2020, 4, 10))].record.confirmed == 7


def test_equal_timestamps_break_by_larger_counts():
    kept = coalesce_daily([(IT, row(8, 5)), (IT, row(8, 7))])
    assert kept[(IT, dt.date(2020, 4, 10))].record.confirmed == 7
    # then larger cured, then larger deaths
    kept = coalesce_daily([(IT, row(8, 7, cured=1)), (IT, row(8, 7, cured=2))])
    assert kept[(IT, dt.date(2020, 4, 10))].record.cured == 2
    kept = coalesce_daily([(IT, row(8, 7, deaths=3)), (IT, row(8, 7, deaths=1))])
    assert kept[(IT, dt.date(2020, 4, 10))].record.deaths == 3


def test_utc_day_bucketing():
    # 23:30 UTC and 00:30 UTC the next day are different buckets
    late = RawRow(
        observed_at=dt.datetime(2020, 4, 9, 23, 30, tzinfo=UTC),
        raw_country="Italy", raw_province=None, raw_city=None,
        confirmed=5, cured=0, deaths=0,
    )
    early = RawRow(
        observed_at=dt.datetime(2020, 4, 10, 0, 30, tzinfo=UTC),
        raw_country="Italy", raw_province=None, raw_city=None,
        confirmed=6, cured=0, deaths=0,
    )
    kept = coalesce_daily([(IT, late), (IT, early)])
    assert set(kept) == {(IT, dt.date(2020, 4, 9)), (IT, dt.date(2020, 4, 10))}


@given(
    st.lists(
        st.tuples(
            st.integers(0, 23),
            st.integers(0, 59),
            st.integers(0, 100),
            st.integers(0, 100),
            st.integers(0, 100),
        ),
        min_size=1,
        max_size=12,
    ),
    st.randoms(use_true_random=False),
)
def test_result_is_order_independent(specs, rng):
    rows = [
        (IT, row(h, c, cured=r, deaths=d, minute=m)) for h, m, c, r, d in specs
    ]
    baseline = coalesce_daily(rows)
    shuffled = rows[:]
    rng.shuffle(shuffled)
    assert coalesce_daily(shuffled) == baseline
