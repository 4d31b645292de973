"""1-D sweep descriptions and the CSV/JSON record writer used by the CLI."""
from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass, field
from typing import Literal, Sequence

import numpy as np

from .errors import UsageError
from .quantities import _ALIASES, _SUFFIXES, Quantity


@dataclass(frozen=True)
class SweepSpec:
    variable: str
    start: float
    stop: float
    step: float | None = None
    count: int | None = None
    scale: Literal["linear", "log"] = "linear"

    def __post_init__(self):
        if not self.start < self.stop:
            raise UsageError(f"sweep start ({self.start}) must be < stop ({self.stop})")
        if (self.step is None) == (self.count is None):
            raise UsageError("give exactly one of step or count")
        if self.step is not None and not self.step > 0:
            raise UsageError("sweep step must be > 0")
        if self.count is not None and self.count < 2:
            raise UsageError("sweep count must be >= 2")
        if self.scale == "log":
            if self.start <= 0:
                raise UsageError("log sweep needs start > 0")
            if self.step is not None:
                raise UsageError("log sweep takes a count, not a step")

    def __len__(self):
        return self.n_samples

    @property
    def n_samples(self) -> int:
        if self.count is not None:
            return self.count
        # tolerate rounding: 0.5:5:0.1 has 46 points, not 45
        return int(math.floor((self.stop - self.start) / self.step + 1e-9)) + 1

    def values(self) -> np.ndarray:
        if self.scale == "log":
            return np.geomspace(self.start, self.stop, self.n_samples)
        if self.count is not None:
            return np.linspace(self.start, self.stop, self.count)
        return self.start + self.step * np.arange(self.n_samples)


def parse_sweep(text: str, variable: str = "x", default_unit: str | None = None) -> SweepSpec:
    """Parse ``start:stop:step<unit>`` or ``start:stop/count<unit>``.

    The trailing unit applies to every number; a ``log:`` prefix selects
    geometric spacing (count form only).
    """
    body = text.strip()
    scale = "linear"
    if body.startswith("log:"):
        scale, body = "log", body[4:]
    unit = default_unit
    for suffix in _SUFFIXES:
        if body.endswith(suffix):
            unit, body = _ALIASES[suffix], body[: -len(suffix)].strip()
            break
    try:
        if "/" in body:
            span, count = body.split("/")
            a, b = span.split(":")
            nums, count = [float(a), float(b)], int(count)
        else:
            a, b, step = body.split(":")
            nums, count = [float(a), float(b), float(step)], None
    except ValueError:
        raise UsageError(f"malformed sweep {text!r}") from None
    if not all(math.isfinite(x) for x in nums):
        raise UsageError(f"malformed sweep {text!r}")
    if unit is not None:
        nums = [Quantity(x, unit).to_si() for x in nums]
    if count is not None:
        return SweepSpec(variable, nums[0], nums[1], count=count, scale=scale)
    return SweepSpec(variable, nums[0], nums[1], step=nums[2], scale=scale)


def fmt(x) -> str:
    """12 significant digits; stable across runs."""
    if isinstance(x, (bool, np.bool_)):
        return str(bool(x)).lower()
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return format(float(x), ".12g")
    return str(x)


@dataclass
class OutputRecord:
    columns: Sequence[str]
    rows: list[Sequence] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def add(self, *row):
        if len(row) != len(self.columns):
            raise ValueError(f"row has {len(row)} values, header has {len(self.columns)}")
        self.rows.append(row)

    def to_csv(self, version: str = "") -> str:
        buf = io.StringIO()
        params = " ".join(f"{k}={fmt(v)}" for k, v in sorted(self.meta.items()))
        buf.write(f"# thzkit {version} {params}".rstrip() + "\n")
        buf.write(",".join(self.columns) + "\n")
        for row in self.rows:
            buf.write(",".join(fmt(v) for v in row) + "\n")
        return buf.getvalue()

    def to_json(self, version: str = "") -> str:
        def py(v):
            if isinstance(v, (np.floating,)):
                return float(v)
            if isinstance(v, (np.integer,)):
                return int(v)
            return v

        records = [{c: py(v) for c, v in zip(self.columns, row)} for row in self.rows]
        doc = {
            "tool": f"thzkit {version}".strip(),
            "params": {k: py(v) for k, v in sorted(self.meta.items())},
            "rows": records[0] if len(records) == 1 else records,
        }
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
