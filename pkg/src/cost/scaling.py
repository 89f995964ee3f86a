"""
Scaling functions f for the generalized cost sum w_ij * f(|leaves(T[i v j])|).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from src.utils.errors import ValidationError

ScalingKind = Literal["linear", "log", "power", "table"]


@dataclass(frozen=True)
class ScalingFunction:
    """
    Strictly increasing f with f(0) = 0.

    Attributes:
        kind: linear f(x)=x, log f(x)=ln(1+x), power f(x)=x^a, or table
        exponent: a > 0 for kind="power"
        table: f(0), f(1), ..., f(N) for kind="table"
    """

    kind: ScalingKind = "linear"
    exponent: float = 1.0
    table: tuple[float, ...] = ()

    def __post_init__(self):
        if self.kind not in ("linear", "log", "power", "table"):
            raise ValidationError(f"unknown scaling function kind {self.kind!r}")
        if self.kind == "power" and not self.exponent > 0:
            raise ValidationError(f"power exponent must be positive, got {self.exponent}")
        if self.kind == "table":
            if not self.table:
                raise ValidationError("table scaling function needs at least f(0)")
            if self.table[0] != 0:
                raise ValidationError(f"table scaling function needs f(0) = 0, got {self.table[0]}")
            for x in range(1, len(self.table)):
                if not self.table[x] > self.table[x - 1]:
                    raise ValidationError(f"table scaling function is not strictly increasing at {x}")

    @classmethod
    def linear(cls) -> ScalingFunction:
        return cls("linear")

    @classmethod
    def log(cls) -> ScalingFunction:
        return cls("log")

    @classmethod
    def power(cls, exponent: float) -> ScalingFunction:
        return cls("power", exponent=float(exponent))

    @classmethod
    def from_table(cls, values: list[float] | tuple[float, ...]) -> ScalingFunction:
        return cls("table", table=tuple(float(v) for v in values))

    @property
    def is_linear(self) -> bool:
        return self.kind == "linear" or (self.kind == "power" and self.exponent == 1.0)

    @property
    def domain_max(self) -> int | None:
        """Largest argument a table function is defined on; None when unbounded."""
        return len(self.table) - 1 if self.kind == "table" else None

    def check_domain(self, n: int) -> None:
        top = self.domain_max
        if top is not None and n > top:
            raise ValidationError(f"table scaling function covers 0..{top}, needs 0..{n}")

    def __call__(self, x: float) -> float:
        if self.kind == "linear":
            return float(x)
        if self.kind == "log":
            return math.log1p(x)
        if self.kind == "power":
            return float(x) ** self.exponent
        idx = int(x)
        if idx != x or not 0 <= idx < len(self.table):
            raise ValidationError(f"table scaling function is undefined at {x}")
        return self.table[idx]

    def values(self, xs: np.ndarray) -> np.ndarray:
        """Vectorized f over an integer array."""
        arr = np.asarray(xs)
        if self.kind == "linear":
            return arr.astype(np.float64)
        if self.kind == "log":
            return np.log1p(arr.astype(np.float64))
        if self.kind == "power":
            return np.power(arr.astype(np.float64), self.exponent)
        if arr.size and (arr.min() < 0 or arr.max() >= len(self.table)):
            raise ValidationError("table scaling function evaluated outside its domain")
        return np.asarray(self.table, dtype=np.float64)[arr.astype(np.int64)]

    @property
    def spec(self) -> str:
        """Round-trippable text form accepted by parse_scaling."""
        if self.kind == "power":
            return f"power:{self.exponent:g}"
        if self.kind == "table":
            return "table:" + ",".join(f"{v:g}" for v in self.table)
        return self.kind

    def __str__(self) -> str:
        return self.spec


def parse_scaling(spec: str | None) -> ScalingFunction:
    """
    Parse "linear", "log", "power:A" or "table:v0,v1,...".

    Raises:
        ValidationError: On unknown names or malformed parameters
    """
    if spec is None:
        return ScalingFunction.linear()
    text = spec.strip().lower()
    if text in ("linear", "x", "identity"):
        return ScalingFunction.linear()
    if text in ("log", "ln"):
        return ScalingFunction.log()
    name, _, arg = text.partition(":")
    try:
        if name == "power":
            return ScalingFunction.power(float(arg))
        if name == "table":
            return ScalingFunction.from_table([float(v) for v in arg.split(",")])
    except ValueError:
        raise ValidationError(f"malformed scaling function {spec!r}")
    raise ValidationError(f"unknown scaling function {spec!r}")
