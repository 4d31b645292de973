import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from thzkit.errors import UsageError
from thzkit.sweep import OutputRecord, SweepSpec, fmt, parse_sweep


def test_documented_sweeps():
    s = parse_sweep("0.5:5:0.1THz", "f")
    v = s.values()
    assert len(v) == 46
    assert v[0] == 5e11 and v[-1] == pytest.approx(5e12, rel=1e-12)
    assert len(parse_sweep("0:35:0.5", "vg", default_unit="V").values()) == 71
    with pytest.raises(UsageError):
        parse_sweep("5:0.5:0.1THz")


def test_count_and_log_forms():
    v = parse_sweep("1:10/10THz").values()
    np.testing.assert_allclose(v, np.linspace(1e12, 1e13, 10))
    g = parse_sweep("log:1:100/3m").values()
    np.testing.assert_allclose(g, [1, 10, 100])
    with pytest.raises(UsageError):
        parse_sweep("log:1:100:1m")


@pytest.mark.parametrize("bad", ["", "1:2", "a:b:c", "1:2:0", "1:2/1", "1:2:-1", "1:inf:1"])
def test_malformed(bad):
    with pytest.raises(UsageError):
        parse_sweep(bad)


@given(start=st.floats(-1e3, 1e3), width=st.floats(1e-3, 1e3), n=st.integers(2, 500))
def test_count_sweep_properties(start, width, n):
    s = SweepSpec("x", start, start + width, count=n)
    v = s.values()
    assert len(v) == n and v[0] == start
    assert np.all(np.diff(v) > 0)


@given(start=st.floats(0, 10), n=st.integers(1, 400), step=st.floats(0.01, 1))
def test_step_sweep_hits_stop(start, n, step):
    s = SweepSpec("x", start, start + n * step, step=step)
    assert len(s.values()) == n + 1


def test_record_arity_and_precision():
    r = OutputRecord(["a", "b"], meta={"z": 1, "a": 0.1})
    r.add(1.0, 1 / 3)
    with pytest.raises(ValueError):
        r.add(1.0)
    text = r.to_csv("9.9")
    lines = text.splitlines()
    assert lines[0] == "# thzkit 9.9 a=0.1 z=1"
    assert lines[1] == "a,b"
    assert float(lines[2].split(",")[1]) == pytest.approx(1 / 3, rel=1e-11)


def test_fmt_keeps_twelve_digits():
    assert fmt(np.float64(1 / 3)) == "0.333333333333"
    assert fmt(True) == "true"
    assert fmt(3) == "3"


def test_json_single_and_many():
    r = OutputRecord(["x"], meta={"k": "v"})
    r.add(np.float64(2.0))
    doc = json.loads(r.to_json("1"))
    assert doc["rows"] == {"x": 2.0} and doc["params"] == {"k": "v"}
    r.add(3.0)
    assert json.loads(r.to_json("1"))["rows"] == [{"x": 2.0}, {"x": 3.0}]
