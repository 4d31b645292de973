import math

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from oracles import E, HBAR, KB, MU0, mp_cnt_sigma, mp_copper_sigma, mp_copper_skin_depth, mp_graphene_sigma
from thzkit.errors import DomainError, SingularityError
from thzkit.materials import (
    CntParams,
    CopperParams,
    GrapheneParams,
    cnt_film_sigma,
    cnt_impedance_per_length,
    cnt_rl,
    cnt_sigma_intra,
    copper_drude_sigma,
    copper_skin_depth,
    copper_surface_rl,
    copper_wave_impedance,
    graphene_sigma_intra,
    graphene_surface_impedance,
    sheet_sigma,
    tau_from_mobility,
)
from thzkit.quantities import CONST

EV = CONST.e
freqs = st.floats(1e11, 1e13)
graphene = st.builds(GrapheneParams, mu_c=st.floats(0, 1.0).map(lambda m: m * EV),
                     tau=st.floats(1e-14, 1e-11), temp=st.floats(1, 600))
cnts = st.builds(CntParams, radius=st.floats(0.3e-9, 10e-9), vf=st.floats(1e5, 1.5e6),
                 tau=st.floats(1e-13, 1e-11))
coppers = st.builds(CopperParams, sigma0=st.floats(1e6, 1e8), tau=st.floats(1e-15, 1e-13))


# ------------------------------------------------------------------ graphene

def test_graphene_sigma_golden():
    p = GrapheneParams(mu_c=0.3 * EV, tau=1e-13, temp=300)
    sigma = graphene_sigma_intra(1e12, p)
    # frozen from a 40-digit evaluation
    assert sigma.real == pytest.approx(2.531884630426556e-3, rel=1e-12)
    assert sigma.imag == pytest.approx(-1.590830030936995e-3, rel=1e-12)
    z = graphene_surface_impedance(1e12, p).z
    assert z.real == pytest.approx(283.17119655018, rel=1e-11)
    assert z.imag == pytest.approx(177.92171015806, rel=1e-11)


@given(f=freqs, p=graphene)
def test_graphene_matches_multiprecision(f, p):
    ref = mp_graphene_sigma(f, p.mu_c / EV, p.tau, p.temp)
    assert abs(graphene_sigma_intra(f, p) - ref) <= 1e-12 * abs(ref)


def test_graphene_neutral_point():
    p = GrapheneParams(mu_c=0.0, tau=1e-12, temp=300)
    w = 2 * math.pi * 1e12
    expected = -1j * E**2 * KB * 300 * 2 * math.log(2) / (math.pi * HBAR**2 * (w - 1j / p.tau))
    assert graphene_sigma_intra(1e12, p) == pytest.approx(expected, rel=1e-12)


def test_graphene_degenerate_limit():
    p = GrapheneParams(mu_c=0.5 * EV, tau=1e-12, temp=300)
    w = 2 * math.pi * 1e12
    limit = -1j * E**2 * p.mu_c / (math.pi * HBAR**2 * (w - 1j / p.tau))
    assert abs(graphene_sigma_intra(1e12, p) / limit - 1) < 1e-3


def test_graphene_vectorised():
    f = np.linspace(0.1e12, 10e12, 7)
    p = GrapheneParams()
    np.testing.assert_allclose(graphene_sigma_intra(f, p), [graphene_sigma_intra(x, p) for x in f], rtol=1e-15)


@given(f=freqs, p=graphene)
def test_graphene_passive_and_inductive(f, p):
    s = graphene_sigma_intra(f, p)
    assert s.real > 0
    assert s.imag < 0


@given(f=freqs, p=graphene)
def test_impedance_is_reciprocal(f, p):
    z = graphene_surface_impedance(f, p).z
    assert z * graphene_sigma_intra(f, p) == pytest.approx(1 + 0j, rel=1e-13, abs=1e-13)


@given(f=freqs, mu=st.floats(0.1, 1.0))
def test_graphene_reactance_inductive(f, mu):
    assert graphene_surface_impedance(f, GrapheneParams(mu_c=mu * EV)).z.imag > 0


def test_graphene_singular_impedance():
    p = GrapheneParams(mu_c=0.0, tau=1e-15, temp=1e-7)
    with pytest.raises(SingularityError):
        graphene_surface_impedance(1e12, p)


def test_frequency_domain_errors():
    with pytest.raises(DomainError):
        graphene_sigma_intra(0.0, GrapheneParams())
    with pytest.raises(DomainError):
        cnt_sigma_intra(-1.0, CntParams())
    with pytest.raises(DomainError):
        copper_drude_sigma(-1.0, CopperParams())


@pytest.mark.parametrize("kwargs", [dict(tau=0), dict(temp=0), dict(mu_c=-1e-21)])
def test_graphene_param_invariants(kwargs):
    with pytest.raises(DomainError):
        GrapheneParams(**kwargs)


def test_tau_from_mobility():
    tau = tau_from_mobility(1.0, 0.3 * EV, 1e6)
    assert tau == pytest.approx(0.3e-12, rel=1e-12)
    assert tau_from_mobility(2.0, 0.3 * EV) == pytest.approx(2 * tau, rel=1e-15)
    assert tau_from_mobility(1.0, 0.0) == 0.0
    with pytest.raises(DomainError):
        tau_from_mobility(-1.0, 0.3 * EV)


# ----------------------------------------------------------------------- CNT

def test_cnt_constants():
    r, l = cnt_rl(CntParams(vf=8e5, tau=3e-12))
    assert l == pytest.approx(4.033251165516329e-3, rel=1e-12)
    assert r == pytest.approx(1.344417055172110e9, rel=1e-12)
    r2, l2 = cnt_rl(CntParams(vf=8e5, tau=6e-12))
    assert r2 == pytest.approx(r / 2, rel=1e-15)
    assert l2 == l


def test_cnt_sigma_golden():
    s = cnt_sigma_intra(1e12, CntParams())
    ref = mp_cnt_sigma(1e12, 2.712e-9, 8e5, 3e-12)
    assert s == pytest.approx(ref, rel=1e-13)
    assert s.real == pytest.approx(1.225105788666300e-4, rel=1e-12)


def test_cnt_dc_limit_and_radius_scaling():
    p = CntParams()
    dc = 2 * E**2 * p.vf * p.tau / (math.pi**2 * HBAR * p.radius)
    assert cnt_sigma_intra(1.0, p) == pytest.approx(dc, rel=1e-9)
    big = CntParams(radius=2 * p.radius)
    assert abs(cnt_sigma_intra(1e12, big)) == pytest.approx(abs(cnt_sigma_intra(1e12, p)) / 2, rel=1e-14)


@given(f=freqs, p=cnts)
def test_cnt_impedance_is_r_plus_jwl(f, p):
    r, l = cnt_rl(p)
    z = cnt_impedance_per_length(f, p).z
    assert abs(z - (r + 2j * math.pi * f * l)) <= 1e-12 * abs(z)


@given(f=freqs, p=cnts, r2=st.floats(0.3e-9, 10e-9))
def test_cnt_impedance_radius_independent(f, p, r2):
    other = CntParams(radius=r2, vf=p.vf, tau=p.tau)
    a, b = cnt_impedance_per_length(f, p).z, cnt_impedance_per_length(f, other).z
    assert abs(a - b) <= 1e-12 * abs(a)


def test_cnt_reactance_equals_resistance_at_relaxation_frequency():
    p = CntParams()
    z = cnt_impedance_per_length(1 / (2 * math.pi * p.tau), p).z
    assert z.imag == pytest.approx(z.real, rel=1e-12)


@given(f=freqs, tau=st.floats(0.3e-12, 3e-12))
def test_cnt_reactance_ratio_is_omega_tau(f, tau):
    r, l = cnt_rl(CntParams(tau=tau))
    assert 2 * math.pi * f * l / r == pytest.approx(2 * math.pi * f * tau, rel=1e-13)


@given(f=st.floats(1e11, 5e12), tau=st.floats(0.3e-12, 3e-12))
def test_cnt_reactance_ratio_window(f, tau):
    # w*tau <= 100 only up to f*tau = 100/(2*pi); 10 THz at 3 ps reaches ~188
    r, l = cnt_rl(CntParams(tau=tau))
    assert 0.1 <= 2 * math.pi * f * l / r <= 100


def test_cnt_armchair_only():
    with pytest.raises(DomainError):
        CntParams(armchair=False)


def test_cnt_film_close_packed():
    p = CntParams()
    pitch = 2 * p.radius + 0.34e-9
    expected = 2 * math.pi * p.radius * cnt_sigma_intra(1e12, p) / pitch
    assert cnt_film_sigma(1e12, p) == pytest.approx(expected, rel=1e-15)
    assert sheet_sigma(1e12, p) == cnt_film_sigma(1e12, p)
    with pytest.raises(DomainError):
        cnt_film_sigma(1e12, p, pitch=p.radius)
    with pytest.raises(DomainError):
        sheet_sigma(1e12, CopperParams())


# -------------------------------------------------------------------- copper

def test_copper_drude_points():
    p = CopperParams()
    assert copper_drude_sigma(0.0, p) == complex(p.sigma0, 0.0)
    f1 = 1 / (2 * math.pi * p.tau)
    assert copper_drude_sigma(f1, p) == pytest.approx(p.sigma0 * (1 - 1j) / 2, rel=1e-14)
    s = copper_drude_sigma(1e12, p)
    assert s == pytest.approx(mp_copper_sigma(1e12, p.sigma0, p.tau), rel=1e-14)
    assert s.real == pytest.approx(5.82e7, rel=2e-3)
    assert s.imag == pytest.approx(-9.1e6, rel=5e-3)


def test_copper_density_consistency():
    p = CopperParams()
    q = CopperParams.from_density(p.electron_density, p.tau)
    assert q.sigma0 == pytest.approx(p.sigma0, rel=1e-12)
    with pytest.raises(DomainError):
        CopperParams(sigma0=5.96e7, tau=2.5e-14, n=1.1 * p.electron_density)


def test_copper_good_conductor_limit():
    p = CopperParams(sigma0=5.96e7, tau=1e-18)
    f = 1e9
    z = copper_wave_impedance(f, p).z
    ideal = (1 + 1j) * math.sqrt(2 * math.pi * f * MU0 / (2 * p.sigma0))
    assert abs(z / ideal - 1) < 1e-2


def test_copper_impedance_golden():
    z = copper_wave_impedance(1e12, CopperParams()).z
    assert z.real == pytest.approx(0.23800513820473, rel=1e-11)
    assert z.imag == pytest.approx(0.27830901329260, rel=1e-11)
    r, l = copper_surface_rl(1e12, CopperParams())
    assert r == pytest.approx(z.real)
    assert l * 2 * math.pi * 1e12 == pytest.approx(z.imag)


def test_copper_impedance_positive_across_band():
    f = np.linspace(0.1e12, 10e12, 500)
    z = copper_wave_impedance(f, CopperParams()).z
    assert np.all(z.real > 0) and np.all(z.imag > 0)


def test_copper_skin_depth_golden():
    p = CopperParams()
    ref = mp_copper_skin_depth(1e12, p.sigma0, p.tau)
    assert ref == pytest.approx(6.559088092929973e-8, rel=1e-12)
    assert copper_skin_depth(1e12, p) == pytest.approx(ref, rel=1e-12)


def test_copper_skin_depth_scaling_and_monotone():
    p = CopperParams(tau=1e-18)
    q = CopperParams(sigma0=4 * p.sigma0, tau=1e-18)
    assert copper_skin_depth(1e9, q) == pytest.approx(copper_skin_depth(1e9, p) / 2, rel=1e-6)
    f = np.linspace(0.1e12, 10e12, 2000)
    d = copper_skin_depth(f, CopperParams())
    assert np.all(np.diff(d) < 0)


@given(p=coppers, f=freqs)
def test_copper_passive(p, f):
    assert copper_drude_sigma(f, p).real > 0
    assert copper_wave_impedance(f, p).z.real >= 0


@given(p=coppers, f1=freqs, f2=freqs)
def test_copper_magnitude_decreasing(p, f1, f2):
    assume(f1 < f2 * (1 - 1e-9))
    assert abs(copper_drude_sigma(f1, p)) > abs(copper_drude_sigma(f2, p))


@given(f=freqs, p=cnts)
def test_cnt_passive(f, p):
    assert cnt_sigma_intra(f, p).real > 0
    assert cnt_impedance_per_length(f, p).z.real >= 0
