"""
Cut result type shared by the exact and heuristic solvers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Literal

from src.utils.errors import ValidationError

Objective = Literal["sparsest", "balanced-f"]


@dataclass(frozen=True)
class Cut:
    """
    A bipartition (A, B) of the vertex set.

    Attributes:
        side_a: The side containing node 0 (unless the caller built it otherwise)
        side_b: The complementary side
        weight: w(A, B)
        ratio: Objective value under `objective`
        objective: "sparsest" for w/(|A||B|), "balanced-f" for w/min(f(|A|), f(|B|))
        certified: True when the value is a proven optimum (exact enumeration)
        solver: Name of the solver that produced the cut
    """

    side_a: frozenset[int]
    side_b: frozenset[int]
    weight: float
    ratio: float
    objective: Objective = "sparsest"
    certified: bool = False
    solver: str = "exact"

    def __post_init__(self):
        if not self.side_a or not self.side_b:
            raise ValidationError("both sides of a cut must be nonempty")
        if self.side_a & self.side_b:
            raise ValidationError("cut sides must be disjoint")
        if self.weight < 0:
            raise ValidationError(f"cut weight cannot be negative, got {self.weight}")

    @property
    def sizes(self) -> tuple[int, int]:
        return len(self.side_a), len(self.side_b)

    @property
    def balance(self) -> int:
        """|A| * |B|"""
        return len(self.side_a) * len(self.side_b)

    def to_json(self) -> dict[str, Any]:
        return {
            "a": sorted(self.side_a),
            "b": sorted(self.side_b),
            "weight": self.weight,
            "ratio": self.ratio,
            "objective": self.objective,
            "certified": self.certified,
            "solver": self.solver,
        }
