"""Intraband conductivity and impedance of graphene, armchair CNTs and copper.

All functions accept scalars or numpy arrays for the frequency argument and
follow the ``exp(+j*omega*t)`` convention, so inductive reactances come out
with a positive imaginary part.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Union

import numpy as np

from .errors import DomainError, SingularityError
from .quantities import CONST

# interlayer spacing of graphite; sets the pitch of a close-packed CNT film
VDW_GAP = 0.34e-9


@dataclass(frozen=True)
class GrapheneParams:
    mu_c: float = 0.3 * CONST.e  # J
    tau: float = 1e-12
    temp: float = 300.0

    def __post_init__(self):
        if not self.tau > 0:
            raise DomainError("graphene tau must be > 0")
        if not self.temp > 0:
            raise DomainError("graphene temp must be > 0")
        if not self.mu_c >= 0:
            raise DomainError("graphene mu_c must be >= 0 (electron doping only)")

    @property
    def mu_c_ev(self) -> float:
        return self.mu_c / CONST.e


@dataclass(frozen=True)
class CntParams:
    radius: float = 2.712e-9  # (40,40) armchair tube
    vf: float = 8.0e5
    tau: float = 3e-12
    armchair: bool = True

    def __post_init__(self):
        if not self.armchair:
            raise DomainError("CNT conductivity model is valid for metallic armchair tubes only")
        if not (self.radius > 0 and self.vf > 0 and self.tau > 0):
            raise DomainError("CNT radius, vf and tau must all be > 0")


@dataclass(frozen=True)
class CopperParams:
    sigma0: float = 5.96e7
    tau: float = 2.5e-14
    n: float | None = None
    m_e: float = CONST.m_e

    def __post_init__(self):
        if not (self.sigma0 > 0 and self.tau > 0):
            raise DomainError("copper sigma0 and tau must be > 0")
        if self.n is not None:
            expected = self.n * CONST.e**2 * self.tau / self.m_e
            if abs(expected - self.sigma0) > 1e-6 * self.sigma0:
                raise DomainError(
                    f"sigma0={self.sigma0:g} inconsistent with n*e^2*tau/m = {expected:g}"
                )

    @classmethod
    def from_density(cls, n: float, tau: float, m_e: float = CONST.m_e) -> "CopperParams":
        return cls(sigma0=n * CONST.e**2 * tau / m_e, tau=tau, n=n, m_e=m_e)

    @property
    def electron_density(self) -> float:
        if self.n is not None:
            return self.n
        return self.sigma0 * self.m_e / (CONST.e**2 * self.tau)


MaterialModel = Union[GrapheneParams, CntParams, CopperParams]


@dataclass(frozen=True)
class SurfaceImpedance:
    z: complex
    kind: Literal["sheet", "per_length", "wave"]

    @property
    def resistance(self):
        return np.real(self.z)

    @property
    def reactance(self):
        return np.imag(self.z)


def _check_freq(f, allow_zero=False):
    f = np.asarray(f, dtype=float)
    bad = f < 0 if allow_zero else f <= 0
    if np.any(bad) or np.any(~np.isfinite(f)):
        raise DomainError(f"frequency must be {'>= 0' if allow_zero else '> 0'}")
    return f


def _scalar(x):
    return x.item() if isinstance(x, np.ndarray) and x.ndim == 0 else x


# ------------------------------------------------------------------ graphene

def graphene_drude_weight(p: GrapheneParams):
    """Prefactor ``D`` with ``sigma = -j*D/(omega - j/tau)`` (S/s)."""
    kt = CONST.kB * p.temp
    x = p.mu_c / kt
    # log1p(exp(-x)) stays accurate for large x
    bracket = x + 2.0 * np.log1p(np.exp(-x))
    return CONST.e**2 * kt / (np.pi * CONST.hbar**2) * bracket


def graphene_sigma_intra(f, p: GrapheneParams):
    """Intraband sheet conductivity (S) of graphene."""
    w = 2 * np.pi * _check_freq(f)
    return _scalar(-1j * graphene_drude_weight(p) / (w - 1j / p.tau))


def graphene_surface_impedance(f, p: GrapheneParams) -> SurfaceImpedance:
    sigma = graphene_sigma_intra(f, p)
    if np.any(np.abs(sigma) < 1e-12):
        raise SingularityError("graphene conductivity too small to invert")
    return SurfaceImpedance(1.0 / sigma, "sheet")


def tau_from_mobility(mobility: float, mu_c: float, vf: float = 1.0e6) -> float:
    """Relaxation time from DC mobility (m^2/Vs) and chemical potential (J).

    ``mu_c == 0`` gives 0, which no conductivity model accepts.
    """
    if not (mobility > 0 and vf > 0 and mu_c >= 0):
        raise DomainError("mobility and vf must be > 0, mu_c >= 0")
    return mobility * mu_c / (CONST.e * vf**2)


# ----------------------------------------------------------------------- CNT

def cnt_sigma_intra(f, p: CntParams):
    """Intraband surface conductivity (S) of the tube wall."""
    w = 2 * np.pi * _check_freq(f)
    d = 2 * CONST.e**2 * p.vf / (np.pi**2 * CONST.hbar * p.radius)
    return _scalar(-1j * d / (w - 1j / p.tau))


def cnt_rl(p: CntParams) -> tuple[float, float]:
    """Scattering resistance (ohm/m) and kinetic inductance (H/m) of one tube."""
    l_kin = np.pi * CONST.hbar / (4 * CONST.e**2 * p.vf)
    return l_kin / p.tau, l_kin


def cnt_impedance_per_length(f, p: CntParams) -> SurfaceImpedance:
    sigma = cnt_sigma_intra(f, p)
    return SurfaceImpedance(1.0 / (2 * np.pi * p.radius * sigma), "per_length")


def cnt_film_sigma(f, p: CntParams, pitch: float | None = None):
    """Sheet conductivity (S) of a monolayer of parallel tubes.

    Each tube contributes its wall current ``2*pi*r*sigma_CNT``; dividing by
    the centre-to-centre ``pitch`` homogenises the array into a sheet. The
    default pitch is close packing, ``2r + VDW_GAP``.
    """
    if pitch is None:
        pitch = 2 * p.radius + VDW_GAP
    if not pitch >= 2 * p.radius:
        raise DomainError("tube pitch smaller than the tube diameter")
    return 2 * np.pi * p.radius * cnt_sigma_intra(f, p) / pitch


# -------------------------------------------------------------------- copper

def copper_drude_sigma(f, p: CopperParams):
    w = 2 * np.pi * _check_freq(f, allow_zero=True)
    return _scalar(p.sigma0 / (1 + 1j * w * p.tau))


def copper_wave_impedance(f, p: CopperParams) -> SurfaceImpedance:
    """Intrinsic wave impedance ``sqrt(j w mu0 / (sigma_D + j w eps0))``.

    Principal root, so ``re(z) >= 0``. Real part is ``R_cu``, imaginary part
    the total reactance (internal and kinetic together).
    """
    w = 2 * np.pi * _check_freq(f)
    sigma = copper_drude_sigma(f, p)
    return SurfaceImpedance(_scalar(np.sqrt(1j * w * CONST.mu0 / (sigma + 1j * w * CONST.eps0))), "wave")


def copper_surface_rl(f, p: CopperParams):
    """``(R_cu, L_total)`` with ``Z_cu = R_cu + j*omega*L_total``."""
    z = copper_wave_impedance(f, p).z
    w = 2 * np.pi * np.asarray(f, dtype=float)
    return _scalar(np.real(z)), _scalar(np.imag(z) / w)


def copper_skin_depth(f, p: CopperParams):
    """Skin depth ``sqrt(2)/|gamma|`` with ``gamma = sqrt(j w mu0 (sigma_D + j w eps0))``.

    Reduces to ``sqrt(2/(w mu0 sigma0))`` when ``w*tau << 1``; past the
    relaxation frequency it keeps falling with f, unlike a formula built on
    ``re(sigma_D)`` alone.
    """
    w = 2 * np.pi * _check_freq(f)
    sigma = copper_drude_sigma(f, p)
    if np.any(np.real(sigma) <= 0):
        raise DomainError("non-positive real conductivity")
    gamma_abs = np.sqrt(w * CONST.mu0 * np.abs(sigma + 1j * w * CONST.eps0))
    return _scalar(np.sqrt(2.0) / gamma_abs)


# ------------------------------------------------------------------- presets

GRAPHENE_DEFAULT = GrapheneParams()
CNT_DEFAULT = CntParams()
COPPER_DEFAULT = CopperParams()


def sheet_sigma(f, material: MaterialModel, pitch: float | None = None):
    """Sheet conductivity for the two materials that behave as 2-D sheets."""
    if isinstance(material, GrapheneParams):
        return graphene_sigma_intra(f, material)
    if isinstance(material, CntParams):
        return cnt_film_sigma(f, material, pitch)
    raise DomainError(f"{type(material).__name__} has no sheet conductivity")
