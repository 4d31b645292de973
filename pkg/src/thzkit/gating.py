"""Electrostatic gating: oxide capacitance -> carrier density -> chemical potential."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, MissingGeometryError
from .quantities import CONST

SIO2_EPS_R = 3.9


@dataclass(frozen=True)
class GateStack:
    cox: float  # F/m^2
    vf: float = 1.0e6
    oxide_thickness: float | None = None
    oxide_rel_permittivity: float | None = None

    def __post_init__(self):
        if not self.cox > 0:
            raise DomainError("cox must be > 0")
        if not self.vf > 0:
            raise DomainError("vf must be > 0")
        t, er = self.oxide_thickness, self.oxide_rel_permittivity
        if t is not None and er is not None:
            if abs(self.cox * t - CONST.eps0 * er) > 1e-9 * CONST.eps0 * er:
                raise DomainError("cox inconsistent with oxide thickness and permittivity")

    @classmethod
    def from_oxide(cls, thickness: float, eps_r: float = SIO2_EPS_R, vf: float = 1.0e6) -> "GateStack":
        if not (thickness > 0 and eps_r > 0):
            raise DomainError("oxide thickness and permittivity must be > 0")
        return cls(CONST.eps0 * eps_r / thickness, vf, thickness, eps_r)

    @classmethod
    def from_cox(cls, cox: float, eps_r: float | None = SIO2_EPS_R, vf: float = 1.0e6) -> "GateStack":
        """Stack with known capacitance; thickness follows if ``eps_r`` is given."""
        if eps_r is None:
            return cls(cox, vf)
        return cls(cox, vf, CONST.eps0 * eps_r / cox, eps_r)


@dataclass(frozen=True)
class GateOperatingPoint:
    vg: float
    n: float
    e_field: float | None
    mu_c: float

    @property
    def n_per_cm2(self) -> float:
        return self.n * 1e-4

    @property
    def mu_c_ev(self) -> float:
        return self.mu_c / CONST.e

    @property
    def e_field_mv_per_cm(self) -> float | None:
        return None if self.e_field is None else self.e_field * 1e-8


def _check_vg(vg):
    vg = np.asarray(vg, dtype=float)
    if np.any(vg < 0) or np.any(~np.isfinite(vg)):
        raise DomainError("gate voltage must be >= 0 (hole doping not modelled)")
    return vg


def _out(x):
    return x.item() if isinstance(x, np.ndarray) and x.ndim == 0 else x


def carrier_density(vg, stack: GateStack):
    """Induced sheet density n = C_ox V_g / e (m^-2)."""
    return _out(stack.cox * _check_vg(vg) / CONST.e)


def chemical_potential_from_gate(vg, stack: GateStack):
    """mu_c = hbar v_f sqrt(pi n) in joules."""
    n = carrier_density(vg, stack)
    return _out(CONST.hbar * stack.vf * np.sqrt(np.pi * np.asarray(n)))


def gate_voltage_for_mu(mu_c, stack: GateStack):
    mu_c = np.asarray(mu_c, dtype=float)
    if np.any(mu_c < 0):
        raise DomainError("mu_c must be >= 0")
    return _out(CONST.e * mu_c**2 / (np.pi * stack.cox * CONST.hbar**2 * stack.vf**2))


def oxide_field(vg, stack: GateStack):
    if stack.oxide_thickness is None:
        raise MissingGeometryError("stack has no oxide thickness; field undefined")
    return _out(_check_vg(vg) / stack.oxide_thickness)


def operating_point(vg: float, stack: GateStack) -> GateOperatingPoint:
    field = oxide_field(vg, stack) if stack.oxide_thickness is not None else None
    return GateOperatingPoint(
        vg=float(vg),
        n=carrier_density(vg, stack),
        e_field=field,
        mu_c=chemical_potential_from_gate(vg, stack),
    )


# Published bias table: (V_g [V], n [cm^-2], E [MV/cm], mu_c [eV]).
BIAS_TABLE_ROWS = (
    (7.6, 6.7e12, 3.06, 0.3),
    (13.6, 12e12, 5.44, 0.4),
    (21.2, 18.8e12, 8.5, 0.5),
    (30.6, 27e12, 12.2, 0.6),
)


def fit_cox(rows=BIAS_TABLE_ROWS) -> float:
    """Least-squares C_ox through the origin of the (V_g, e*n) pairs."""
    vg = np.array([r[0] for r in rows])
    charge = np.array([r[1] * 1e4 for r in rows]) * CONST.e
    return float(vg @ charge / (vg @ vg))


# cox ~ 1.414e-3 F/m^2, i.e. ~24.4 nm of SiO2
BIAS_TABLE_STACK = GateStack.from_cox(fit_cox(), SIO2_EPS_R, vf=1.0e6)

STACK_PRESETS = {"table2": BIAS_TABLE_STACK}
