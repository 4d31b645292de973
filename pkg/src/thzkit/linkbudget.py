"""THz path loss: Friis spreading plus table-driven molecular absorption, in dB."""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DomainError, OutOfRangeError, ParseError
from .quantities import CONST

LOG10_E = math.log10(math.e)


@dataclass(frozen=True)
class AbsorptionTable:
    """Absorption coefficient K(f) in 1/m, linearly interpolated, never extrapolated."""

    f: tuple[float, ...]
    k: tuple[float, ...]

    def __post_init__(self):
        f = np.asarray(self.f, dtype=float)
        k = np.asarray(self.k, dtype=float)
        if f.ndim != 1 or f.size < 1 or f.shape != k.shape:
            raise DomainError("absorption table needs matching, non-empty f and K columns")
        if np.any(np.diff(f) <= 0):
            raise DomainError("absorption table frequencies must be strictly increasing")
        if np.any(k < 0) or not np.all(np.isfinite(k)):
            raise DomainError("absorption coefficients must be finite and >= 0")
        object.__setattr__(self, "f", tuple(f.tolist()))
        object.__setattr__(self, "k", tuple(k.tolist()))

    @classmethod
    def transparent(cls, f_lo: float = 0.0, f_hi: float = math.inf) -> "AbsorptionTable":
        if math.isinf(f_hi):
            f_hi = 1e300
        return cls((f_lo, f_hi), (0.0, 0.0))

    @classmethod
    def from_csv(cls, path) -> "AbsorptionTable":
        return cls.parse_csv(Path(path).read_text(encoding="utf-8"))

    @classmethod
    def parse_csv(cls, text: str) -> "AbsorptionTable":
        """Read ``f_hz,k_per_m`` CSV text (header required, ``#`` lines skipped)."""
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        reader = csv.reader(io.StringIO("\n".join(lines)))
        header = [h.strip() for h in next(reader, [])]
        if header != ["f_hz", "k_per_m"]:
            raise ParseError(f"absorption CSV header must be 'f_hz,k_per_m', got {','.join(header)!r}")
        f, k = [], []
        for n, row in enumerate(reader, 2):
            try:
                fi, ki = (float(x) for x in row)
            except ValueError:
                raise ParseError(f"absorption CSV row {n}: expected two numbers") from None
            f.append(fi)
            k.append(ki)
        return cls(tuple(f), tuple(k))

    def coefficient(self, f):
        f = np.asarray(f, dtype=float)
        lo, hi = self.f[0], self.f[-1]
        if np.any(f < lo) or np.any(f > hi):
            raise OutOfRangeError(f"frequency outside absorption table [{lo:g}, {hi:g}] Hz")
        if len(self.f) == 1:
            return np.full_like(f, self.k[0])[()]
        return np.interp(f, self.f, self.k)[()]


@dataclass(frozen=True)
class LinkParams:
    f: float
    d: float
    p_tx: float = 0.0  # dBm
    g_tx: float = 0.0  # dBi
    g_rx: float = 0.0  # dBi

    def __post_init__(self):
        if not (self.f > 0 and self.d > 0):
            raise DomainError("link needs f > 0 and d > 0")


def _check(f, d):
    f = np.asarray(f, dtype=float)
    d = np.asarray(d, dtype=float)
    if np.any(f <= 0) or np.any(d <= 0):
        raise DomainError("f and d must be > 0")
    return f, d


def spreading_loss_db(f, d):
    """Friis spreading loss ``20 log10(4 pi f d / c0)``."""
    f, d = _check(f, d)
    return (20.0 * np.log10(4 * np.pi * f * d / CONST.c0))[()]


def absorption_loss_db(f, d, table: AbsorptionTable):
    """Beer-Lambert ``exp(K d)`` attenuation in dB."""
    f, d = _check(f, d)
    return (10.0 * LOG10_E * table.coefficient(f) * d)[()]


def total_path_loss_db(f, d, table: AbsorptionTable):
    return absorption_loss_db(f, d, table) + spreading_loss_db(f, d)


def received_power_dbm(link: LinkParams, table: AbsorptionTable) -> float:
    return float(link.p_tx + link.g_tx + link.g_rx - total_path_loss_db(link.f, link.d, table))
