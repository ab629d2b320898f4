import datetime as dt

import pytest
from hypothesis import given
from hypothesis import strategies as st

from epitrack import metrics
from epitrack.errors import InvalidArgumentError
from epitrack.model import (
    Continent,
    CumulativeSeries,
    DailyRecord,
    FieldArrays,
    RegionId,
    RegionMeta,
)

D = dt.date


def series_of(confirmed, cured=None, deaths=None, dates=None, region=RegionId("IT")):
    cured = cured or [0] * len(confirmed)
    deaths = deaths or [0] * len(confirmed)
    dates = dates or [D(2020, 4, 1) + dt.timedelta(days=i) for i in range(len(confirmed))]
    records = [DailyRecord(d, c, r, dd) for d, c, r, dd in zip(dates, confirmed, cured, deaths)]
    return CumulativeSeries.from_clean_records(region, records)


def meta_with_population(population):
    return RegionMeta(
        id=RegionId("IT"), display_name="Italy", continent=Continent.EUROPE,
        population=population, aliases=frozenset({"Italy"}),
    )


def test_daily_deltas_example():
    points = metrics.derive_series(series_of([2, 5, 5, 9]))
    assert [p.daily_confirmed for p in points] == [2, 3, 0, 4]
    assert [p.confirmed for p in points] == [2, 5, 5, 9]


def test_first_day_delta_is_first_value():
    points = metrics.derive_series(series_of([7]))
    assert points[0].daily_confirmed == 7


def test_gap_days_contribute_nothing_and_deltas_span_gaps():
    points = metrics.derive_series(
        series_of([5, 9], dates=[D(2020, 4, 1), D(2020, 4, 3)])
    )
    assert [p.date for p in points] == [D(2020, 4, 1), D(2020, 4, 3)]
    assert [p.daily_confirmed for p in points] == [5, 4]


def test_mortality_rate_is_exact_quotient():
    points = metrics.derive_series(series_of([100], deaths=[7]))
    assert points[0].mortality_rate == 0.07
    assert points[0].mortality_rate == 7 / 100


def test_cure_rate():
    points = metrics.derive_series(series_of([100], cured=[30]))
    assert points[0].cure_rate == 30 / 100


def test_rates_absent_when_confirmed_zero_per_million_zero():
    points = metrics.derive_series(series_of([0]), meta_with_population(60_000_000))
    point = points[0]
    assert point.mortality_rate is None
    assert point.cure_rate is None
    assert point.per_million == 0.0


def test_per_million_quotient():
    points = metrics.derive_series(series_of([600]), meta_with_population(60_000_000))
    assert points[0].per_million == 10.0


def test_per_million_absent_without_population():
    points = metrics.derive_series(series_of([600]), meta_with_population(None))
    assert points[0].per_million is None
    assert metrics.derive_series(series_of([600]))[0].per_million is None


def test_active_and_clamping():
    points = metrics.derive_series(series_of([10, 10], cured=[3, 6], deaths=[2, 5]))
    assert points[0].active == 5 and not points[0].active_clamped
    assert points[1].active == 0 and points[1].active_clamped


def test_rates_may_exceed_one_when_feed_overcounts():
    # cured + deaths > confirmed is preserved, not hidden
    points = metrics.derive_series(series_of([5], cured=[6]))
    assert points[0].cure_rate == 6 / 5


def test_unrepaired_input_rejected():
    arrays = FieldArrays.from_records(
        [DailyRecord(D(2020, 4, 1), 5, 0, 0), DailyRecord(D(2020, 4, 2), 3, 0, 0)]
    )
    broken = CumulativeSeries(
        region=RegionId("IT"), dates=(D(2020, 4, 1), D(2020, 4, 2)),
        raw=arrays, repaired=arrays,
    )
    with pytest.raises(InvalidArgumentError):
        metrics.derive_series(broken)


monotone_series = st.lists(st.integers(0, 50), min_size=1, max_size=25).map(
    lambda steps: [sum(steps[: i + 1]) for i in range(len(steps))]
)


@given(monotone_series)
def test_delta_cumsum_round_trip(confirmed):
    points = metrics.derive_series(series_of(confirmed))
    running = 0
    for point in points:
        running += point.daily_confirmed
        assert running == point.confirmed


def test_effective_series_prefers_own_data(fixture_version):
    own = fixture_version.series[RegionId("CN")]
    assert metrics.effective_series(fixture_version, RegionId("CN")) is own


def test_effective_series_rolls_up_registry_only_nodes():
    import epitrack.store as store_mod
    from epitrack.ingest.repair import repair_arrays
    from epitrack.tables import default_tables

    tables = default_tables()
    builder = store_mod.VersionBuilder()
    for city, conf in (("Wuhan", 5), ("Xiaogan", 3)):
        region = RegionId("CN", "Hubei", city)
        records = [DailyRecord(D(2020, 4, 10), conf, 0, 0)]
        builder.put_series(
            repair_arrays(region, (D(2020, 4, 10),), FieldArrays.from_records(records))
        )
        node = region
        while node is not None:
            if node not in builder.registry:
                builder.put_meta(tables.meta_for(node))
            node = node.parent
    version = store_mod.DatasetStore().publish(builder)

    assert RegionId("CN", "Hubei") not in version.series
    effective = metrics.effective_series(version, RegionId("CN", "Hubei"))
    assert effective.repaired.confirmed.tolist() == [8]
    country = metrics.effective_series(version, RegionId("CN"))
    assert country.repaired.confirmed.tolist() == [8]
    assert metrics.effective_series(version, RegionId("IT")) is None
