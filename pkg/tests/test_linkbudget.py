import math
from importlib import resources

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from thzkit.errors import DomainError, OutOfRangeError, ParseError
from thzkit.linkbudget import (
    AbsorptionTable,
    LinkParams,
    absorption_loss_db,
    received_power_dbm,
    spreading_loss_db,
    total_path_loss_db,
)

TEN_LOG_E = 4.342944819032518
freqs = st.floats(1e6, 1e14)
dists = st.floats(1e-3, 1e5)
FLAT = AbsorptionTable((0.1e12, 10e12), (0.1, 0.1))


def test_spreading_examples():
    assert spreading_loss_db(1e12, 1.0) == pytest.approx(92.44778322188337, abs=1e-10)
    assert spreading_loss_db(1e12, 2.0) - spreading_loss_db(1e12, 1.0) == pytest.approx(6.020599913, abs=1e-9)
    for d in (1.0, 10.0, 100.0):
        assert spreading_loss_db(1e12, d) - spreading_loss_db(1e9, d) == pytest.approx(60.0, abs=1e-9)


@given(f=freqs, d=dists)
def test_decade_in_frequency_is_20db(f, d):
    assert spreading_loss_db(10 * f, d) - spreading_loss_db(f, d) == pytest.approx(20.0, abs=1e-9)


def test_absorption_examples():
    assert absorption_loss_db(1e12, 10.0, AbsorptionTable.transparent()) == 0.0
    assert absorption_loss_db(1e12, 10.0, FLAT) == pytest.approx(TEN_LOG_E, abs=1e-12)
    mid = AbsorptionTable((1e12, 2e12), (0.1, 0.3))
    assert mid.coefficient(1.5e12) == pytest.approx(0.2, abs=1e-15)
    assert total_path_loss_db(1e12, 10.0, FLAT) == pytest.approx(112.4478 + 4.3429, abs=1e-3)


def test_no_extrapolation():
    with pytest.raises(OutOfRangeError):
        FLAT.coefficient(11e12)
    with pytest.raises(OutOfRangeError):
        absorption_loss_db(0.05e12, 1.0, FLAT)
    single = AbsorptionTable((1e12,), (0.5,))
    assert single.coefficient(1e12) == 0.5
    with pytest.raises(OutOfRangeError):
        single.coefficient(1.1e12)


@pytest.mark.parametrize("f, k", [((), ()), ((2.0, 1.0), (0, 0)), ((1.0, 2.0), (0, -1)), ((1.0,), (0, 1))])
def test_table_invariants(f, k):
    with pytest.raises(DomainError):
        AbsorptionTable(f, k)


def test_csv_parsing(tmp_path):
    text = "# comment\nf_hz,k_per_m\n1e12,0.1\n2e12,0.3\n"
    path = tmp_path / "k.csv"
    path.write_text(text)
    t = AbsorptionTable.from_csv(path)
    assert t.f == (1e12, 2e12) and t.k == (0.1, 0.3)
    with pytest.raises(ParseError):
        AbsorptionTable.parse_csv("freq,k\n1,2\n")
    with pytest.raises(ParseError):
        AbsorptionTable.parse_csv("f_hz,k_per_m\n1,abc\n")


def test_shipped_example_table():
    text = resources.files("thzkit").joinpath("data/absorption_example.csv").read_text()
    assert "SYNTHETIC" in text
    t = AbsorptionTable.parse_csv(text)
    assert t.f[0] == pytest.approx(0.1e12) and t.f[-1] == pytest.approx(10e12)
    peak = np.argmax(t.k)
    assert t.f[peak] == pytest.approx(0.55e12, abs=0.01e12)


@given(fa=st.floats(1, 100), fb=st.floats(1, 100), ka=st.floats(0, 10), kb=st.floats(0, 10),
       x=st.floats(0, 1))
def test_interpolation_bounded(fa, fb, ka, kb, x):
    assume(fb > fa * (1 + 1e-9))
    t = AbsorptionTable((fa, fb), (ka, kb))
    k = t.coefficient(fa + x * (fb - fa))
    assert min(ka, kb) - 1e-12 <= k <= max(ka, kb) + 1e-12


@given(d1=dists, d2=dists, f=st.floats(0.1e12, 10e12))
def test_path_loss_increasing_in_distance(d1, d2, f):
    assume(d2 > d1 * (1 + 1e-9))
    assert total_path_loss_db(f, d2, FLAT) > total_path_loss_db(f, d1, FLAT)


@given(f=st.floats(0.1e12, 10e12), d=dists)
def test_total_is_sum(f, d):
    total = total_path_loss_db(f, d, FLAT)
    assert total == pytest.approx(spreading_loss_db(f, d) + absorption_loss_db(f, d, FLAT), abs=1e-12)


def test_received_power():
    lossless = AbsorptionTable.transparent()
    base = received_power_dbm(LinkParams(1e12, 1.0), lossless)
    assert base == pytest.approx(-92.45, abs=5e-3)
    assert received_power_dbm(LinkParams(1e12, 1.0, g_tx=3.0), lossless) == pytest.approx(base + 3, abs=1e-12)
    far = received_power_dbm(LinkParams(1e12, 2.0), lossless)
    assert far - base == pytest.approx(-6.0206, abs=1e-4)
    with pytest.raises(DomainError):
        LinkParams(0.0, 1.0)
    with pytest.raises(DomainError):
        spreading_loss_db(1e12, -1.0)
