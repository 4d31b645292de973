"""TM surface-plasmon modes of a conductive sheet between two dielectrics.

The mode obeys the thin-sheet dispersion relation

    eps1/kappa1 + eps2/kappa2 + sigma/(j*omega*eps0) = 0,
    kappa_i = sqrt(k**2 - eps_i*k0**2),  re(kappa_i) > 0,

written internally in the normalised index ``q = k/k0`` where it reads
``eps1/s1 + eps2/s2 = j*sigma*eta0`` with ``s_i = sqrt(q**2 - eps_i)``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import ConvergenceError, DomainError, ModeNotBoundError, SingularityError
from .materials import GrapheneParams, graphene_sigma_intra
from .quantities import CONST
from .sweep import SweepSpec

MAX_ITER = 200
RESIDUAL_TOL = 1e-9
F_MAX = 10e12


@dataclass(frozen=True)
class DielectricEnvironment:
    eps1: float = 1.0
    eps2: float = 3.9

    def __post_init__(self):
        for name in ("eps1", "eps2"):
            v = getattr(self, name)
            if isinstance(v, complex) or not v >= 1.0:
                raise DomainError(f"{name} must be real and >= 1 (lossless dielectric), got {v}")

    @property
    def eps_max(self) -> float:
        return max(self.eps1, self.eps2)


AIR_SIO2 = DielectricEnvironment(1.0, 3.9)


@dataclass(frozen=True)
class SppMode:
    k_spp: complex
    f: float

    @property
    def k0(self) -> float:
        return 2 * math.pi * self.f / CONST.c0

    @property
    def lambda_spp(self) -> float:
        return 2 * math.pi / self.k_spp.real

    @property
    def confinement(self) -> float:
        return self.k_spp.real / self.k0

    @property
    def prop_length(self) -> float:
        im = abs(self.k_spp.imag)
        return math.inf if im == 0 else 1.0 / (2.0 * im)


def _prepare(f, sigma):
    if not f > 0:
        raise DomainError("frequency must be > 0")
    sigma = complex(sigma)
    if abs(sigma) < 1e-12:
        raise SingularityError("sheet conductivity too small")
    if sigma.real < 0:
        raise DomainError("active sheet (re(sigma) < 0) not supported")
    return sigma


def _checked_mode(q: complex, f: float, env: DielectricEnvironment) -> SppMode:
    # bound mode: slower than light in both media, decaying forward wave
    if not q.real > math.sqrt(env.eps_max):
        raise ModeNotBoundError(
            f"re(k)/k0 = {q.real:.6g} does not exceed sqrt(eps_max) = {math.sqrt(env.eps_max):.6g}"
        )
    if q.imag > 1e-12 * abs(q):
        raise ModeNotBoundError(f"growing wave: im(k)/k0 = {q.imag:.3g} > 0")
    q = complex(q.real, min(q.imag, 0.0))
    return SppMode(q * 2 * math.pi * f / CONST.c0, float(f))


def spp_quasistatic(f: float, sigma: complex, env: DielectricEnvironment = AIR_SIO2) -> SppMode:
    """Non-retarded limit ``k = -j*omega*eps0*(eps1 + eps2)/sigma``."""
    sigma = _prepare(f, sigma)
    q = (env.eps1 + env.eps2) / (1j * sigma * CONST.eta0)
    return _checked_mode(q, f, env)


def _g(u, e_hi, e_lo, rhs):
    # u = sqrt(q**2 - e_hi); the other decay constant is sqrt(u**2 + e_hi - e_lo)
    v = cmath.sqrt(u * u + (e_hi - e_lo))
    return e_hi / u + e_lo / v - rhs, -e_hi / (u * u) - e_lo * u / v**3


def dispersion_residual(k: complex, f: float, sigma: complex, env: DielectricEnvironment) -> float:
    """``|eps1/kappa1 + eps2/kappa2 + sigma/(j w eps0)| / |sigma/(j w eps0)|``."""
    w = 2 * math.pi * f
    k0 = w / CONST.c0
    k1 = cmath.sqrt(k * k - env.eps1 * k0**2)
    k2 = cmath.sqrt(k * k - env.eps2 * k0**2)
    term = sigma / (1j * w * CONST.eps0)
    return abs(env.eps1 / k1 + env.eps2 / k2 + term) / abs(term)


def spp_exact(f: float, sigma: complex, env: DielectricEnvironment = AIR_SIO2) -> SppMode:
    """Retarded TM mode by damped Newton iteration.

    Newton runs in ``u = sqrt(q**2 - eps_max)``, the decay constant on the
    denser side, which removes the branch point at the light line. The
    quasi-static index seeds ``u`` directly and is exact when ``eps1 == eps2``.
    """
    sigma = _prepare(f, sigma)
    e_hi, e_lo = max(env.eps1, env.eps2), min(env.eps1, env.eps2)
    rhs = 1j * sigma * CONST.eta0
    u = (env.eps1 + env.eps2) / rhs
    scale = abs(rhs)
    g = math.inf
    for _ in range(MAX_ITER):
        g, dg = _g(u, e_hi, e_lo, rhs)
        if abs(g) <= 1e-14 * scale:
            break
        if dg == 0:
            raise ConvergenceError("zero derivative in SPP Newton step", abs(g) / scale)
        step = g / dg
        # clamp to half the current magnitude
        if abs(step) > 0.5 * abs(u):
            step *= 0.5 * abs(u) / abs(step)
        u -= step
        if abs(step) <= 1e-15 * abs(u):
            g = _g(u, e_hi, e_lo, rhs)[0]
            break
    rel = abs(g) / scale
    if not rel < RESIDUAL_TOL:
        raise ConvergenceError(f"SPP solver did not converge (relative residual {rel:.3g})", rel)
    # proper mode: both decay constants with positive real part
    if not (u.real > 0 and cmath.sqrt(u * u + e_hi - e_lo).real > 0):
        raise ModeNotBoundError("root lies on an improper sheet (field grows away from the sheet)")
    q = cmath.sqrt(u * u + e_hi)
    if q.real < 0:
        q = -q
    return _checked_mode(q, f, env)


def confinement_curve(
    sweep: SweepSpec | Iterable[float],
    p: GrapheneParams,
    env: DielectricEnvironment = AIR_SIO2,
) -> list[SppMode]:
    freqs = sweep.values() if isinstance(sweep, SweepSpec) else np.asarray(list(sweep), dtype=float)
    if np.any(freqs <= 0) or np.any(freqs > F_MAX):
        raise DomainError("graphene sweep must stay within (0, 10 THz]")
    return [spp_exact(float(f), graphene_sigma_intra(float(f), p), env) for f in freqs]
