"""Both kernel backends must implement identical semantics."""

import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from epitrack.kernels import _numba, _numpy

BACKENDS = [_numpy, _numba]

values_arrays = st.lists(
    st.integers(min_value=0, max_value=10**9), min_size=0, max_size=40
).map(lambda xs: np.array(xs, dtype=np.int64))


@pytest.mark.parametrize("backend", BACKENDS, ids=["numpy", "numba"])
class TestBackends:
    def test_running_max_example(self, backend):
        out = backend.running_max(np.array([1, 3, 2, 4], dtype=np.int64))
        assert out.tolist() == [1, 3, 3, 4]

    def test_deltas_example(self, backend):
        out = backend.deltas(np.array([2, 5, 5, 9], dtype=np.int64))
        assert out.tolist() == [2, 3, 0, 4]

    def test_carry_forward_grid(self, backend):
        dates = np.array([10, 12], dtype=np.int64)
        values = np.array([5, 8], dtype=np.int64)
        grid = np.array([9, 10, 11, 12, 13], dtype=np.int64)
        out = backend.carry_forward_grid(dates, values, grid)
        assert out.tolist() == [0, 5, 5, 8, 8]

    def test_rollup_grid_two_children(self, backend):
        # child A reports on day 1 only; child B on day 2 only
        starts = np.array([0, 1, 2], dtype=np.int64)
        dates = np.array([1, 2], dtype=np.int64)
        values = np.array([5, 3], dtype=np.int64)
        grid = np.array([1, 2], dtype=np.int64)
        assert backend.rollup_grid(starts, dates, values, grid).tolist() == [5, 8]

    def test_carry_forward_at(self, backend):
        dates = np.array([10, 12], dtype=np.int64)
        values = np.array([5, 8], dtype=np.int64)
        assert backend.carry_forward_at(dates, values, 9) == 0
        assert backend.carry_forward_at(dates, values, 10) == 5
        assert backend.carry_forward_at(dates, values, 11) == 5
        assert backend.carry_forward_at(dates, values, 99) == 8


@given(values_arrays)
def test_running_max_backends_agree(values):
    assert _numpy.running_max(values).tolist() == _numba.running_max(values).tolist()


@given(values_arrays)
def test_deltas_backends_agree(values):
    assert _numpy.deltas(values).tolist() == _numba.deltas(values).tolist()


@given(
    st.lists(st.integers(0, 1000), min_size=1, max_size=15, unique=True),
    st.lists(st.integers(0, 1000), min_size=1, max_size=25, unique=True),
    st.data(),
)
def test_carry_forward_backends_agree(date_list, grid_list, data):
    dates = np.array(sorted(date_list), dtype=np.int64)
    values = np.array(
        data.draw(
            st.lists(
                st.integers(0, 10**6), min_size=len(date_list), max_size=len(date_list)
            )
        ),
        dtype=np.int64,
    )
    grid = np.array(sorted(grid_list), dtype=np.int64)
    assert (
        _numpy.carry_forward_grid(dates, values, grid).tolist()
        == _numba.carry_forward_grid(dates, values, grid).tolist()
    )


@settings(max_examples=50)
@given(st.integers(1, 4), st.data())
def test_rollup_backends_agree(n_children, data):
    chunks = []
    for _ in range(n_children):
        days = sorted(data.draw(st.lists(st.integers(0, 60), min_size=1, max_size=8, unique=True)))
        vals = data.draw(st.lists(st.integers(0, 10**6), min_size=len(days), max_size=len(days)))
        chunks.append((days, vals))
    starts = np.cumsum([0] + [len(d) for d, _ in chunks]).astype(np.int64)
    dates_flat = np.array([d for days, _ in chunks for d in days], dtype=np.int64)
    values_flat = np.array([v for _, vals in chunks for v in vals], dtype=np.int64)
    grid = np.unique(dates_flat)
    assert (
        _numpy.rollup_grid(starts, dates_flat, values_flat, grid).tolist()
        == _numba.rollup_grid(starts, dates_flat, values_flat, grid).tolist()
    )


@given(values_arrays)
def test_running_max_properties(values):
    out = _numpy.running_max(values)
    assert np.all(out >= values)
    if out.size:
        assert np.all(np.diff(out) >= 0)
    # independent oracle: explicit loop
    best = None
    expected = []
    for v in values.tolist():
        best = v if best is None or v > best else best
        expected.append(best)
    assert out.tolist() == expected


@pytest.mark.parametrize("flag,expected", [("numpy", "numpy"), ("numba", "numba")])
def test_backend_env_flag(flag, expected):
    code = "import epitrack.kernels as k; print(k.backend_name())"
    out = subprocess.run(
        [sys.executable, "-c", code],
        env={**os.environ, "EPITRACK_KERNELS": flag},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == expected


def test_backend_env_flag_rejects_unknown():
    code = "import epitrack.kernels"
    out = subprocess.run(
        [sys.executable, "-c", code],
        env={**os.environ, "EPITRACK_KERNELS": "fortran"},
        capture_output=True,
        text=True,
    )
    assert out.returncode != 0
