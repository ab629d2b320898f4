import datetime as dt
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from epitrack import metrics
from epitrack.errors import InvalidArgumentError
from epitrack.model import CumulativeSeries, DailyRecord, RegionId

D = dt.date
BASE = D(2020, 4, 1)


def child(region, *day_values):
    records = [
        DailyRecord(BASE + dt.timedelta(days=offset), c, r, dd)
        for offset, c, r, dd in day_values
    ]
    return CumulativeSeries.from_clean_records(region, records)


def rollup_oracle(children):
    """Full-grid brute force: explicit carry-forward walk, then sum."""
    grid = sorted({d for series in children for d in series.dates})
    out = {}
    for day in grid:
        total = [0, 0, 0]
        for series in children:
            last = None
            for i, child_day in enumerate(series.dates):  # dates are sorted
                if child_day <= day:
                    last = series.repaired.row(i)
                else:
                    break
            if last is not None:
                total = [t + v for t, v in zip(total, last)]
        out[day] = tuple(total)
    return out


def as_mapping(series):
    return {day: series.repaired.row(i) for i, day in enumerate(series.dates)}


def test_single_child_is_identity():
    only = child(RegionId("CN", "Hubei", "Wuhan"), (0, 5, 1, 0), (1, 8, 2, 1))
    result = metrics.rollup([only])
    assert as_mapping(result) == as_mapping(only)
    assert result.region == RegionId("CN", "Hubei")


def test_shared_dates_sum_directly():
    a = child(RegionId("CN", "Hubei", "Wuhan"), (0, 1, 0, 0), (1, 2, 0, 0))
    b = child(RegionId("CN", "Hubei", "Xiaogan"), (0, 3, 0, 0), (1, 4, 0, 0))
    result = metrics.rollup([a, b])
    assert [v[0] for v in as_mapping(result).values()] == [4, 6]


def test_carry_forward_and_zero_before_first():
    a = child(RegionId("CN", "Hubei", "Wuhan"), (0, 5, 0, 0))
    b = child(RegionId("CN", "Hubei", "Xiaogan"), (1, 3, 0, 0))
    result = metrics.rollup([a, b])
    mapping = as_mapping(result)
    assert mapping[BASE] == (5, 0, 0)  # B contributes 0 before its first report
    assert mapping[BASE + dt.timedelta(days=1)] == (8, 0, 0)  # A carried forward


def test_empty_child_list_rejected():
    with pytest.raises(InvalidArgumentError):
        metrics.rollup([])


def test_explicit_region_overrides_default():
    only = child(RegionId("CN", "Hubei", "Wuhan"), (0, 5, 0, 0))
    assert metrics.rollup([only], region=RegionId("CN")).region == RegionId("CN")


def test_mixed_parent_children_fall_back_to_first_region():
    a = child(RegionId("CN", "Hubei", "Wuhan"), (0, 1, 0, 0))
    b = child(RegionId("CN", "Guangdong"), (0, 2, 0, 0))
    assert metrics.rollup([a, b]).region == a.region


def random_children(rng, max_children=5, max_dates=10, max_value=10**6):
    n_children = rng.randint(1, max_children)
    children = []
    for k in range(n_children):
        offsets = sorted(rng.sample(range(max_dates), rng.randint(1, max_dates)))
        rows = []
        totals = [0, 0, 0]
        for offset in offsets:
            totals = [t + rng.randrange(max_value // max_dates) for t in totals]
            rows.append((offset, *totals))
        children.append(child(RegionId("CN", "Hubei", f"C{k}"), *rows))
    return children


def test_randomized_against_oracle():
    rng = random.Random(42)
    for _ in range(100):
        children = random_children(rng)
        result = metrics.rollup(children)
        assert as_mapping(result) == rollup_oracle(children)


def test_output_non_decreasing():
    rng = random.Random(7)
    for _ in range(25):
        children = random_children(rng)
        result = metrics.rollup(children)
        for name in ("confirmed", "cured", "deaths"):
            values = result.field_repaired(name).tolist()
            assert values == sorted(values)


@settings(max_examples=60)
@given(st.data())
def test_rollup_consistency_on_shared_dates(data):
    # any date present in every child: parent equals direct sum
    n = data.draw(st.integers(1, 4))
    shared = data.draw(st.lists(st.integers(0, 9), min_size=1, max_size=4, unique=True))
    children = []
    for k in range(n):
        extra = data.draw(st.lists(st.integers(0, 9), max_size=3, unique=True))
        offsets = sorted(set(shared) | set(extra))
        totals = 0
        rows = []
        for offset in offsets:
            totals += data.draw(st.integers(0, 1000))
            rows.append((offset, totals, 0, 0))
        children.append(child(RegionId("CN", "Hubei", f"C{k}"), *rows))
    result = metrics.rollup(children)
    mapping = as_mapping(result)
    for offset in shared:
        day = BASE + dt.timedelta(days=offset)
        direct = sum(
            series.repaired.row(series.dates.index(day))[0] for series in children
        )
        assert mapping[day][0] == direct
