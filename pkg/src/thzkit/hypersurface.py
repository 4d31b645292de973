"""Homogenised reflection model of a graphene sheet on a grounded dielectric slab.

The cell is a shunt sheet admittance ``fill_factor * sigma_s`` in parallel
with a short-circuited slab line of thickness ``t``::

    Z_in  = Z_sheet || j Z_d tan(kz t)
    Gamma = (Z_in - Z_air) / (Z_in + Z_air)

with TE/TM wave impedances for oblique incidence. Functions broadcast over
numpy arrays so large parameter sweeps stay vectorised.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable, Literal

import numpy as np

from .errors import DomainError, GrazingError
from .materials import GrapheneParams, graphene_drude_weight, graphene_sigma_intra
from .quantities import CONST

Polarization = Literal["TE", "TM"]
SILICON_EPS_R = 11.9


@dataclass(frozen=True)
class HsfCell:
    slab_thickness: float
    slab_rel_permittivity: float = SILICON_EPS_R
    fill_factor: float = 1.0
    graphene: GrapheneParams = GrapheneParams()

    def __post_init__(self):
        if not self.slab_thickness > 0:
            raise DomainError("slab thickness must be > 0")
        if not self.slab_rel_permittivity >= 1:
            raise DomainError("slab permittivity must be >= 1")
        if not 0 < self.fill_factor <= 1:
            raise DomainError("fill factor must be in (0, 1]")

    def with_mu_c(self, mu_c: float) -> "HsfCell":
        return replace(self, graphene=replace(self.graphene, mu_c=mu_c))


@dataclass(frozen=True)
class ReflectionSample:
    gamma: complex
    efficiency: float
    phase_deg: float


def _check_angle(theta):
    theta = np.asarray(theta, dtype=float)
    if np.any(theta < 0) or np.any(theta >= math.pi / 2):
        raise DomainError("incidence angle must be in [0, pi/2)")
    return theta


def _pol(pol: str) -> str:
    pol = pol.upper()
    if pol not in ("TE", "TM"):
        raise DomainError(f"polarization must be TE or TM, got {pol!r}")
    return pol


def slab_impedance(f, thickness, eps_r, theta=0.0, pol: Polarization = "TM"):
    """Input impedance ``j Z_d tan(kz t)`` of a grounded lossless slab."""
    pol = _pol(pol)
    theta = _check_angle(theta)
    k0 = 2 * np.pi * np.asarray(f, dtype=float) / CONST.c0
    kz = k0 * np.sqrt(eps_r - np.sin(theta) ** 2)
    if np.any(kz == 0):
        raise GrazingError("normal wavenumber in the slab vanishes")
    z_d = CONST.eta0 * k0 / kz if pol == "TE" else CONST.eta0 * kz / (eps_r * k0)
    return 1j * z_d * np.tan(kz * thickness)


def air_impedance(theta, pol: Polarization = "TM"):
    theta = _check_angle(theta)
    return CONST.eta0 / np.cos(theta) if _pol(pol) == "TE" else CONST.eta0 * np.cos(theta)


def input_impedance_from_sigma(f, sigma_sheet, thickness, eps_r, theta=0.0, pol: Polarization = "TM"):
    """Parallel combination written with admittances so ``sigma -> 0`` is exact."""
    z_slab = slab_impedance(f, thickness, eps_r, theta, pol)
    with np.errstate(divide="ignore"):
        y_slab = np.where(np.isinf(z_slab), 0.0, 1.0 / z_slab)
    return 1.0 / (sigma_sheet + y_slab)


def gamma_from_sigma(f, sigma_sheet, thickness, eps_r, theta=0.0, pol: Polarization = "TM"):
    z_in = input_impedance_from_sigma(f, sigma_sheet, thickness, eps_r, theta, pol)
    z_air = air_impedance(theta, pol)
    return (z_in - z_air) / (z_in + z_air)


def cell_sigma(f, cell: HsfCell):
    return cell.fill_factor * graphene_sigma_intra(f, cell.graphene)


def cell_input_impedance(f, cell: HsfCell, theta: float = 0.0, pol: Polarization = "TM"):
    return input_impedance_from_sigma(
        f, cell_sigma(f, cell), cell.slab_thickness, cell.slab_rel_permittivity, theta, pol
    )[()]


def phase_deg(gamma):
    """Phase in degrees mapped to (-180, 180]."""
    ph = np.degrees(np.angle(gamma))
    return np.where(ph <= -180.0, ph + 360.0, ph)[()]


def reflection(f, cell: HsfCell, theta: float = 0.0, pol: Polarization = "TM") -> ReflectionSample:
    g = gamma_from_sigma(
        f, cell_sigma(f, cell), cell.slab_thickness, cell.slab_rel_permittivity, theta, pol
    )[()]
    return ReflectionSample(g, (np.abs(g) ** 2)[()], phase_deg(g))


def phase_coverage(f: float, cell_template: HsfCell, mu_c_values: Iterable[float],
                   theta: float = 0.0, pol: Polarization = "TM") -> float:
    """Unwrapped span (degrees) of the reflection phase along a bias sweep."""
    mus = [float(m) for m in mu_c_values]
    if len(mus) < 2:
        raise DomainError("phase coverage needs at least two bias values")
    sigma = np.array([
        cell_template.fill_factor * graphene_sigma_intra(f, replace(cell_template.graphene, mu_c=m))
        for m in mus
    ])
    g = gamma_from_sigma(f, sigma, cell_template.slab_thickness,
                         cell_template.slab_rel_permittivity, theta, pol)
    ph = np.unwrap(np.angle(g))
    span = math.degrees(float(ph.max() - ph.min()))
    # an unwrapped sweep that winds past a full turn still spans one turn of states
    return min(span, 360.0)


def resonant_slab_thickness(f: float, mu_c: float, eps_r: float = SILICON_EPS_R,
                            fill_factor: float = 1.0, temp: float = 300.0) -> float:
    """Slab thickness whose capacitive susceptance cancels a lossless sheet at ``f``.

    Normal incidence; the sheet susceptance is ``-fill*D/omega``, which the
    slab balances when ``cot(kd t) = -fill*D*Z_d/omega`` with ``kd t`` in
    ``(pi/2, pi)``.
    """
    w = 2 * math.pi * f
    kd = w / CONST.c0 * math.sqrt(eps_r)
    z_d = CONST.eta0 / math.sqrt(eps_r)
    d = graphene_drude_weight(GrapheneParams(mu_c=mu_c, temp=temp))
    return (math.pi - math.atan(w / (fill_factor * d * z_d))) / kd


# lossless resonance at 1 THz for mu_c = 0.4 eV; operating bias 0.2 eV
DEFAULT_CELL_RESONANT_MU_C = 0.4 * CONST.e
DEFAULT_CELL = HsfCell(
    slab_thickness=resonant_slab_thickness(1e12, DEFAULT_CELL_RESONANT_MU_C),
    slab_rel_permittivity=SILICON_EPS_R,
    fill_factor=1.0,
    graphene=GrapheneParams(mu_c=0.2 * CONST.e, tau=1e-12, temp=300.0),
)

CELL_PRESETS = {"fig4": DEFAULT_CELL}
