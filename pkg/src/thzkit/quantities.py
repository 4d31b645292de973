"""Physical constants, unit handling and the key=value config file.

Everything inside the package works in SI. Units such as eV, THz or um
are only accepted at the I/O boundary through :func:`parse_quantity`.

Complex quantities use the engineering ``exp(+j*omega*t)`` convention:
an inductive impedance has a positive imaginary part and a decaying wave
``exp(-j*k*x)`` has ``imag(k) < 0``. Plain Python/numpy ``complex`` values
carry them.
"""
from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DomainError, ParseError, UnitError


@dataclass(frozen=True)
class PhysConstants:
    """CODATA 2018 values (SI)."""

    e: float = 1.602176634e-19
    hbar: float = 6.62607015e-34 / (2 * math.pi)
    kB: float = 1.380649e-23
    eps0: float = 8.8541878128e-12
    mu0: float = 1.25663706212e-6
    c0: float = 299792458.0
    m_e: float = 9.1093837015e-31
    eta0: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "eta0", math.sqrt(self.mu0 / self.eps0))


CONST = PhysConstants()


# canonical unit -> (SI scale, aliases)
_UNITS: dict[str, tuple[float, tuple[str, ...]]] = {
    "Hz": (1.0, ()),
    "kHz": (1e3, ()),
    "MHz": (1e6, ()),
    "GHz": (1e9, ()),
    "THz": (1e12, ()),
    "m": (1.0, ()),
    "km": (1e3, ()),
    "cm": (1e-2, ()),
    "mm": (1e-3, ()),
    "μm": (1e-6, ("um", "µm")),
    "nm": (1e-9, ()),
    "eV": (CONST.e, ()),
    "meV": (1e-3 * CONST.e, ()),
    "J": (1.0, ()),
    "V": (1.0, ()),
    "K": (1.0, ()),
    "s": (1.0, ()),
    "ns": (1e-9, ()),
    "ps": (1e-12, ()),
    "fs": (1e-15, ()),
    "S": (1.0, ()),
    "mS": (1e-3, ()),
    "S/m": (1.0, ()),
    "Ω": (1.0, ("ohm", "Ohm")),
    "F/m²": (1.0, ("F/m^2", "F/m2")),
    "cm⁻²": (1e4, ("cm^-2", "cm-2", "/cm^2", "/cm2")),
    "m⁻²": (1.0, ("m^-2", "m-2", "/m^2", "/m2")),
    "m/s": (1.0, ()),
    "V/m": (1.0, ()),
    "MV/cm": (1e8, ()),
    "dB": (1.0, ()),
    "dBi": (1.0, ()),
    "dBm": (1.0, ()),
    "deg": (math.pi / 180.0, ("°",)),
    "rad": (1.0, ()),
}

_ALIASES: dict[str, str] = {}
for _canon, (_scale, _alts) in _UNITS.items():
    _ALIASES[_canon] = _canon
    for _alt in _alts:
        _ALIASES[_alt] = _canon
# longest first so "dBm" wins over "m" and "THz" over "Hz"
_SUFFIXES = sorted(_ALIASES, key=len, reverse=True)

SUPPORTED_UNITS = tuple(_UNITS)
_NUMBER = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")


@dataclass(frozen=True)
class Quantity:
    value: float
    unit: str

    def __post_init__(self):
        if self.unit not in _UNITS:
            raise UnitError(f"unsupported unit {self.unit!r}")

    def to_si(self) -> float:
        return self.value * _UNITS[self.unit][0]

    def __str__(self) -> str:
        return format_quantity(self)


def format_quantity(q: Quantity) -> str:
    return f"{q.value!r}{q.unit}"


def to_si(q: Quantity) -> float:
    return q.to_si()


def parse_quantity(text: str, default_unit: str | None = None) -> Quantity:
    """Parse ``"<number><unit>"`` (whitespace allowed between the two).

    ``default_unit`` is used when the text carries no unit at all.
    """
    s = text.strip()
    if not s:
        raise ParseError("empty quantity")
    m = _NUMBER.match(s)
    if m is None:
        raise ParseError(f"malformed quantity {text!r}")
    value = float(m.group(0))
    rest = s[m.end():].strip()
    if rest[:1].isdigit() or rest[:1] == ".":
        raise ParseError(f"malformed number in {text!r}")
    if not rest:
        if default_unit is None:
            raise UnitError(f"missing unit in {text!r}")
        rest = default_unit
    if rest not in _ALIASES:
        raise UnitError(f"unknown unit {rest!r} in {text!r}")
    return Quantity(value, _ALIASES[rest])


def parse_si(text: str, default_unit: str | None = None) -> float:
    return parse_quantity(text, default_unit).to_si()


def db_from_power_ratio(ratio: float) -> float:
    if not ratio > 0:
        raise DomainError(f"power ratio must be positive, got {ratio}")
    return 10.0 * math.log10(ratio)


# ---------------------------------------------------------------- config file

CONFIG_KEYS = {
    "graphene.mu_c": "eV",
    "graphene.tau": "s",
    "graphene.temp": "K",
    "graphene.vf": "m/s",
    "cnt.radius": "m",
    "cnt.vf": "m/s",
    "cnt.tau": "s",
    "copper.sigma0": "S/m",
    "copper.tau": "s",
    "gate.cox": "F/m²",
    "gate.thickness": "m",
    "gate.eps_r": None,
    "env.eps1": None,
    "env.eps2": None,
}


def parse_config(text: str) -> dict[str, float]:
    """Parse ``name = value`` lines into SI floats.

    Values may carry a unit (``graphene.mu_c = 0.4eV``); bare numbers are
    read in the key's default unit.
    """
    out: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"config line {lineno}: expected 'name = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in CONFIG_KEYS:
            raise ParseError(f"config line {lineno}: unknown key {key!r}")
        unit = CONFIG_KEYS[key]
        if unit is None:
            try:
                out[key] = float(value)
            except ValueError:
                raise ParseError(f"config line {lineno}: malformed number {value!r}") from None
        else:
            out[key] = parse_si(value, default_unit=unit)
    return out


def load_config(path: str | os.PathLike | None = None) -> dict[str, float]:
    """Read the config at ``path``, falling back to ``$THZKIT_CONFIG``."""
    if path is None:
        path = os.environ.get("THZKIT_CONFIG")
        if not path:
            return {}
    return parse_config(Path(path).read_text(encoding="utf-8"))
