"""
Solver selection by cut mode.
"""

from __future__ import annotations

import logging
from typing import Literal

from src.config.constants import EXACT_CUT_CAP
from src.cost.scaling import ScalingFunction
from src.cuts.exact import balanced_f_cut_exact, sparsest_cut_exact
from src.cuts.spectral import balanced_f_cut_heuristic, sparsest_cut_heuristic
from src.cuts.types import Cut
from src.graph import Graph
from src.utils.errors import ValidationError

logger = logging.getLogger(__name__)

CutMode = Literal["exact", "heuristic", "auto"]
CUT_MODES: tuple[str, ...] = ("exact", "heuristic", "auto")


def resolve_mode(mode: str, n: int) -> Literal["exact", "heuristic"]:
    """auto picks exact enumeration up to EXACT_CUT_CAP nodes, the heuristic above it."""
    if mode not in CUT_MODES:
        raise ValidationError(f"unknown cut mode {mode!r} (expected one of {', '.join(CUT_MODES)})")
    if mode == "auto":
        return "exact" if n <= EXACT_CUT_CAP else "heuristic"
    return mode  # type: ignore[return-value]


def sparsest_cut(g: Graph, mode: str = "auto", seed: int | None = 0) -> Cut:
    if resolve_mode(mode, g.n) == "exact":
        return sparsest_cut_exact(g)
    return sparsest_cut_heuristic(g, seed)


def balanced_f_cut(
    g: Graph, f: ScalingFunction, mode: str = "exact", seed: int | None = 0
) -> Cut:
    """
    Minimize w(S, V-S) / min(f(|S|), f(|V-S|)) over cuts with n/3 <= |S| <= 2n/3.

    For n = 2 no size satisfies the constraint and the 1-vs-1 cut is used.

    Raises:
        ValidationError: If n < 2 or the mode is unknown
        CapacityError: If exact mode is asked for above EXACT_CUT_CAP
    """
    if resolve_mode(mode, g.n) == "exact":
        return balanced_f_cut_exact(g, f)
    return balanced_f_cut_heuristic(g, f, seed)
