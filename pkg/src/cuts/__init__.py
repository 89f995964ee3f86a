"""
Sparsest-cut and balanced f-cut solvers (exact enumeration and spectral heuristic)
"""

from src.cuts.dispatch import CUT_MODES, CutMode, balanced_f_cut, resolve_mode, sparsest_cut
from src.cuts.exact import balanced_f_cut_exact, feasible_sizes, sparsest_cut_exact
from src.cuts.spectral import (
    FiedlerResult,
    balanced_f_cut_heuristic,
    fiedler_vector,
    laplacian,
    sparsest_cut_heuristic,
)
from src.cuts.types import Cut

__all__ = [
    "CUT_MODES",
    "Cut",
    "CutMode",
    "FiedlerResult",
    "balanced_f_cut",
    "balanced_f_cut_exact",
    "balanced_f_cut_heuristic",
    "feasible_sizes",
    "fiedler_vector",
    "laplacian",
    "resolve_mode",
    "sparsest_cut",
    "sparsest_cut_exact",
    "sparsest_cut_heuristic",
]
