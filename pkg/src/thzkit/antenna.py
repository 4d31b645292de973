"""Half-wave resonance estimates for graphene, CNT and copper dipoles.

The resonance condition is ``length = mode_order * lambda_eff(f) / 2`` with
no end correction. How ``lambda_eff`` is obtained depends on the material:

* graphene: TM plasmon of the sheet (``plasmonics.spp_exact``);
* CNT, ``layout="film"``: the same plasmon on a close-packed tube monolayer;
* CNT, ``layout="wire"``: an isolated tube as a transmission line with
  per-length ``R + j w L_CNT`` and electrostatic ``C = 2 pi eps0 eps_avg / ln(2h/r)``;
* copper, ``copper_model="free"`` (default): unloaded half-wave dipole,
  ``lambda_eff = lambda0``; ``copper_model="averaged"``: quasi-TEM loading
  ``lambda0 / sqrt((eps1 + eps2)/2)``.

A metal dipole carries no slow wave, so the free-space wavelength is the
default; the averaged form overestimates loading for a strip on a finite
substrate (a 139 um copper dipole then resonates near 0.7 THz, not 1 THz).
"""
from __future__ import annotations

import cmath
import csv
import math
import warnings
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Literal

import numpy as np
from scipy import integrate, optimize

from .errors import DomainError, IntegrationError, ModeNotBoundError, NoResonanceError
from .gating import GateStack, chemical_potential_from_gate
from .materials import (
    CntParams,
    CopperParams,
    GrapheneParams,
    MaterialModel,
    cnt_film_sigma,
    cnt_rl,
    graphene_sigma_intra,
)
from .plasmonics import AIR_SIO2, DielectricEnvironment, spp_exact
from .quantities import CONST

F_LO = 0.05e12
F_HI = 10e12

CntLayout = Literal["film", "wire"]
CopperModel = Literal["free", "averaged"]


@dataclass(frozen=True)
class AntennaSpec:
    material: MaterialModel
    length: float
    env: DielectricEnvironment = AIR_SIO2
    mode_order: int = 1
    cnt_layout: CntLayout = "film"
    wire_height: float | None = None  # CNT wire only; default 100 * radius
    copper_model: CopperModel = "free"

    def __post_init__(self):
        if not self.length > 0:
            raise DomainError("antenna length must be > 0")
        if int(self.mode_order) != self.mode_order or self.mode_order < 1:
            raise DomainError("mode_order must be a positive integer")


@dataclass(frozen=True)
class ResonancePoint:
    f_r: float
    lambda_eff: float
    miniaturization: float


@dataclass(frozen=True)
class TuningPoint:
    vg: float
    mu_c: float
    f_r: float


def cnt_wire_wavenumber(f: float, p: CntParams, env: DielectricEnvironment = AIR_SIO2,
                        height: float | None = None) -> complex:
    """``k = sqrt(w^2 L C - j w R C)`` for one tube above the substrate."""
    h = 100 * p.radius if height is None else height
    if not h > p.radius:
        raise DomainError("wire height must exceed the tube radius")
    r_cnt, l_cnt = cnt_rl(p)
    eps_avg = 0.5 * (env.eps1 + env.eps2)
    c_eff = 2 * math.pi * CONST.eps0 * eps_avg / math.log(2 * h / p.radius)
    w = 2 * math.pi * f
    k = cmath.sqrt(w * w * l_cnt * c_eff - 1j * w * r_cnt * c_eff)
    return k if k.real > 0 else -k


def guided_wavelength(f: float, material: MaterialModel, env: DielectricEnvironment = AIR_SIO2,
                      cnt_layout: CntLayout = "film", wire_height: float | None = None,
                      copper_model: CopperModel = "free") -> float:
    if not f > 0:
        raise DomainError("frequency must be > 0")
    if isinstance(material, GrapheneParams):
        return spp_exact(f, graphene_sigma_intra(f, material), env).lambda_spp
    if isinstance(material, CntParams):
        if cnt_layout == "film":
            return spp_exact(f, cnt_film_sigma(f, material), env).lambda_spp
        if cnt_layout == "wire":
            return 2 * math.pi / cnt_wire_wavenumber(f, material, env, wire_height).real
        raise DomainError(f"unknown CNT layout {cnt_layout!r}")
    if isinstance(material, CopperParams):
        if copper_model == "free":
            return CONST.c0 / f
        if copper_model == "averaged":
            return CONST.c0 / f / math.sqrt(0.5 * (env.eps1 + env.eps2))
        raise DomainError(f"unknown copper model {copper_model!r}")
    raise DomainError(f"unsupported material {type(material).__name__}")


def _lambda_eff(spec: AntennaSpec, f: float) -> float:
    return guided_wavelength(f, spec.material, spec.env, spec.cnt_layout, spec.wire_height,
                             spec.copper_model)


def resonant_length(f: float, material: MaterialModel, env: DielectricEnvironment = AIR_SIO2,
                    mode_order: int = 1, cnt_layout: CntLayout = "film",
                    copper_model: CopperModel = "free") -> float:
    return mode_order * guided_wavelength(f, material, env, cnt_layout, copper_model=copper_model) / 2


def resonant_frequency(spec: AntennaSpec, f_lo: float = F_LO, f_hi: float = F_HI,
                       n_scan: int = 64) -> ResonancePoint:
    """Solve ``length = mode_order * lambda_eff(f) / 2`` inside ``(f_lo, f_hi)``.

    A geometric scan brackets the first sign change. Lossy sheets have no
    bound mode at the lowest frequencies; scan points there are skipped.
    """

    def mismatch(f):
        return spec.mode_order * _lambda_eff(spec, f) / 2 - spec.length

    prev = None
    for f in np.geomspace(f_lo, f_hi, n_scan):
        try:
            m = mismatch(f)
        except ModeNotBoundError:
            prev = None
            continue
        if m == 0:
            lo = hi = f
            break
        if prev is not None and prev[1] * m < 0:
            lo, hi = prev[0], f
            break
        prev = (f, m)
    else:
        raise NoResonanceError(
            f"no resonance for length {spec.length:g} m in ({f_lo:g}, {f_hi:g}) Hz"
        )
    f_r = lo if lo == hi else optimize.brentq(mismatch, lo, hi, xtol=1e-3, rtol=1e-12, maxiter=200)
    lam = _lambda_eff(spec, f_r)
    return ResonancePoint(f_r, lam, CONST.c0 / f_r / spec.length)


def tuning_curve(length: float, stack: GateStack, vg_values: Iterable[float],
                 env: DielectricEnvironment = AIR_SIO2, tau: float = 1e-12,
                 temp: float = 300.0) -> list[TuningPoint]:
    """Resonance of a gated graphene dipole along a bias sweep."""
    vg_values = [float(v) for v in vg_values]
    if any(v < 0 for v in vg_values):
        raise DomainError("gate voltages must be >= 0")
    out = []
    for vg in vg_values:
        mu_c = chemical_potential_from_gate(vg, stack)
        spec = AntennaSpec(GrapheneParams(mu_c=mu_c, tau=tau, temp=temp), length, env)
        out.append(TuningPoint(vg, mu_c, resonant_frequency(spec).f_r))
    return out


# ---------------------------------------------------------------- directivity

def _pattern(theta, half):
    """Far-field intensity of a centre-fed sinusoidal-current dipole."""
    return ((np.cos(half * np.cos(theta)) - np.cos(half)) / np.sin(theta)) ** 2


def dipole_directivity(length: float, k_eff: float) -> float:
    """Peak directivity in dBi of a thin dipole with current wavenumber ``k_eff``."""
    kl = k_eff * length
    if not (length > 0 and k_eff > 0):
        raise DomainError("length and k_eff must be > 0")
    if not kl < 20 * math.pi:
        raise DomainError("k_eff * length must stay below 20*pi")
    half = kl / 2
    grid = np.linspace(1e-6, math.pi - 1e-6, 4001)
    u = _pattern(grid, half)
    i = int(np.argmax(u))
    lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, grid.size - 1)]
    res = optimize.minimize_scalar(lambda t: -_pattern(t, half), bounds=(lo, hi),
                                   method="bounded", options={"xatol": 1e-12})
    u_max = max(float(u[i]), float(-res.fun))
    # integrand scaled by u_max so tiny dipoles keep a sane absolute size
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            total, err = integrate.quad(
                lambda t: _pattern(t, half) / u_max * math.sin(t), 0.0, math.pi,
                epsabs=0.0, epsrel=1e-10, limit=400,
            )
        except integrate.IntegrationWarning as exc:
            raise IntegrationError(str(exc)) from None
    if not total > 0 or err > 1e-4 * total:
        raise IntegrationError(f"pattern integral unreliable ({total:g} +- {err:g})")
    d_lin = 2.0 / total
    return 10 * math.log10(d_lin)


# ------------------------------------------------------------ reference data

def fem_reference_rows() -> list[dict[str, str]]:
    """Published full-wave FEM values (not computed here), for side-by-side display."""
    text = resources.files("thzkit").joinpath("data/fem_reference.csv").read_text(encoding="utf-8")
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    return list(csv.DictReader(lines))
