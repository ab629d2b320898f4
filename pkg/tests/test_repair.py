import datetime as dt

import pytest
from hypothesis import given
from hypothesis import strategies as st

from epitrack.errors import InvalidArgumentError
from epitrack.ingest import repair_monotonic
from epitrack.model import DailyRecord, RegionId


def make_records(confirmed, cured=None, deaths=None):
    cured = cured or [0] * len(confirmed)
    deaths = deaths or [0] * len(confirmed)
    start = dt.date(2020, 3, 1)
    return [
        DailyRecord(start + dt.timedelta(days=i), c, r, d)
        for i, (c, r, d) in enumerate(zip(confirmed, cured, deaths))
    ]


def running_max_oracle(values):
    best, out = None, []
    for v in values:
        best = v if best is None or v > best else best
        out.append(best)
    return out


def test_single_dip_repaired_and_flagged():
    repaired, anomalies = repair_monotonic(make_records([1, 3, 2, 4]))
    assert [r.confirmed for r in repaired] == [1, 3, 3, 4]
    assert len(anomalies) == 1
    flag = anomalies[0]
    assert flag.date == dt.date(2020, 3, 3)
    assert flag.field == "confirmed"
    assert (flag.raw_value, flag.repaired_value) == (2, 3)


def test_clean_input_is_identity():
    records = make_records([1, 2, 2, 5], cured=[0, 1, 1, 2], deaths=[0, 0, 1, 1])
    repaired, anomalies = repair_monotonic(records)
    assert repaired == records
    assert anomalies == []


def test_fields_repaired_independently():
    records = make_records([5, 6], cured=[3, 1], deaths=[2, 2])
    repaired, anomalies = repair_monotonic(records)
    assert [r.cured for r in repaired] == [3, 3]
    assert [r.confirmed for r in repaired] == [5, 6]
    assert {(a.field, a.date.day) for a in anomalies} == {("cured", 2)}


def test_out_of_order_dates_rejected():
    records = [
        DailyRecord(dt.date(2020, 3, 2), 1, 0, 0),
        DailyRecord(dt.date(2020, 3, 1), 2, 0, 0),
    ]
    with pytest.raises(InvalidArgumentError):
        repair_monotonic(records)
    with pytest.raises(InvalidArgumentError):
        repair_monotonic([records[0], records[0]])


def test_empty_series():
    assert repair_monotonic([]) == ([], [])


counts = st.lists(st.integers(0, 10**6), min_size=0, max_size=30)


@given(counts, st.data())
def test_repair_matches_oracle_and_is_idempotent(confirmed, data):
    n = len(confirmed)
    cured = data.draw(st.lists(st.integers(0, 10**6), min_size=n, max_size=n))
    deaths = data.draw(st.lists(st.integers(0, 10**6), min_size=n, max_size=n))
    records = make_records(confirmed, cured, deaths)

    repaired, anomalies = repair_monotonic(records, RegionId("IT"))

    assert [r.confirmed for r in repaired] == running_max_oracle(confirmed)
    assert [r.cured for r in repaired] == running_max_oracle(cured)
    assert [r.deaths for r in repaired] == running_max_oracle(deaths)
    # pointwise >= raw
    for raw, fixed in zip(records, repaired):
        assert fixed.confirmed >= raw.confirmed
        assert fixed.cured >= raw.cured
        assert fixed.deaths >= raw.deaths
        assert fixed.date == raw.date
    # anomalies are exactly the changed (date, field) pairs
    changed = {
        (raw.date, name)
        for raw, fixed in zip(records, repaired)
        for name in ("confirmed", "cured", "deaths")
        if getattr(raw, name) != getattr(fixed, name)
    }
    assert {(a.date, a.field) for a in anomalies} == changed
    for a in anomalies:
        assert a.repaired_value > a.raw_value
    # idempotent
    again, no_anomalies = repair_monotonic(repaired)
    assert again == repaired
    assert no_anomalies == []
