"""
Exact cut search by enumerating every bipartition.

Node 0 always sits on side A, so mask m over nodes 1..n-1 encodes A = {0} + {i : bit
i-1 of m}. The all-ones mask (B empty) is skipped, leaving 2^(n-1) - 1 bipartitions.
Masks are scored in vectorized blocks; the block results are reduced in index order.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from src.config.constants import EXACT_CUT_BLOCK, EXACT_CUT_CAP
from src.cost.scaling import ScalingFunction
from src.cuts.types import Cut, Objective
from src.graph import Graph, components
from src.utils.errors import CapacityError, ValidationError

logger = logging.getLogger(__name__)

# objective(cut_weights, side_a_sizes) -> values; np.inf marks infeasible cuts
ScoreFn = Callable[[np.ndarray, np.ndarray], np.ndarray]

# (value, -balance, sorted side_a, weight)
_Candidate = tuple[float, int, tuple[int, ...], float]


def _edge_arrays(g: Graph) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    if not g.edges:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty, np.zeros(0, dtype=np.float64)
    arr = np.asarray(g.edges, dtype=np.float64)
    return arr[:, 0].astype(np.int64), arr[:, 1].astype(np.int64), arr[:, 2]


def _scan_block(
    start: int,
    stop: int,
    n: int,
    edges: tuple[np.ndarray, np.ndarray, np.ndarray],
    score: ScoreFn,
) -> _Candidate | None:
    eu, ev, ew = edges
    masks = np.arange(start, stop, dtype=np.int64)
    shifts = np.arange(n - 1, dtype=np.int64)
    bits = ((masks[:, None] >> shifts[None, :]) & 1).astype(bool)
    in_a = np.concatenate([np.ones((len(masks), 1), dtype=bool), bits], axis=1)

    if len(ew):
        weights = (in_a[:, eu] != in_a[:, ev]).astype(np.float64) @ ew
    else:
        weights = np.zeros(len(masks), dtype=np.float64)
    sizes = in_a.sum(axis=1)
    values = score(weights, sizes)

    finite = np.isfinite(values)
    if not finite.any():
        return None
    best = values[finite].min()
    chosen = finite & (values == best)
    balance = sizes * (n - sizes)
    best_balance = balance[chosen].max()
    chosen &= balance == best_balance

    idx = np.flatnonzero(chosen)
    sides = [tuple(np.flatnonzero(in_a[i]).tolist()) for i in idx]
    side = min(sides)
    pos = idx[sides.index(side)]
    return float(best), -int(best_balance), side, float(weights[pos])


def exact_search(g: Graph, score: ScoreFn, cap: int = EXACT_CUT_CAP, jobs: int = 1) -> _Candidate:
    """
    Minimize `score` over all bipartitions. Ties prefer the larger |A||B|, then the
    lexicographically smallest sorted side A.

    Raises:
        ValidationError: If n < 2 or no bipartition is feasible
        CapacityError: If n exceeds cap
    """
    n = g.n
    if n < 2:
        raise ValidationError(f"a cut needs at least 2 nodes, got {n}")
    if n > cap:
        raise CapacityError("exact cut enumeration", n, cap)

    total = (1 << (n - 1)) - 1
    edges = _edge_arrays(g)
    ranges = [(lo, min(lo + EXACT_CUT_BLOCK, total)) for lo in range(0, total, EXACT_CUT_BLOCK)]

    if jobs > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(lambda r: _scan_block(r[0], r[1], n, edges, score), ranges))
    else:
        results = [_scan_block(lo, hi, n, edges, score) for lo, hi in ranges]

    candidates = [r for r in results if r is not None]
    if not candidates:
        raise ValidationError("no feasible bipartition")
    return min(candidates)


def component_cut(g: Graph, objective: Objective, solver: str) -> Cut | None:
    parts = components(g)
    if len(parts) < 2:
        return None
    side_a = parts[0]
    side_b = frozenset(range(g.n)) - side_a
    logger.debug("graph is disconnected; splitting off component %s", sorted(side_a))
    return Cut(side_a, side_b, 0.0, 0.0, objective=objective, certified=True, solver=solver)


def sparsest_ratio(weights: np.ndarray, sizes: np.ndarray, n: int) -> np.ndarray:
    return weights / (sizes * (n - sizes))


def sparsest_cut_exact(g: Graph, cap: int = EXACT_CUT_CAP, jobs: int = 1) -> Cut:
    """
    Global minimizer of w(S, V-S) / (|S| |V-S|).

    A disconnected graph returns (component of node 0, rest) at ratio 0.

    Raises:
        ValidationError: If n < 2
        CapacityError: If n exceeds cap
    """
    if g.n < 2:
        raise ValidationError(f"a cut needs at least 2 nodes, got {g.n}")
    if g.n > cap:
        raise CapacityError("exact cut enumeration", g.n, cap)
    shortcut = component_cut(g, "sparsest", "exact")
    if shortcut is not None:
        return shortcut

    n = g.n
    _, _, side, _ = exact_search(g, lambda w, s: sparsest_ratio(w, s, n), cap=cap, jobs=jobs)
    side_a = frozenset(side)
    side_b = frozenset(range(n)) - side_a
    weight = g.cut_weight(side_a, side_b)
    return Cut(
        side_a, side_b, weight, weight / (len(side_a) * len(side_b)),
        objective="sparsest", certified=True, solver="exact",
    )


def feasible_sizes(n: int) -> range:
    """Sizes |S| with n/3 <= |S| <= 2n/3; n = 2 admits the 1-vs-1 cut."""
    if n == 2:
        return range(1, 2)
    return range(-(-n // 3), (2 * n) // 3 + 1)


def balanced_score(f: ScalingFunction, n: int) -> ScoreFn:
    """Scores w / min(f(|S|), f(|V-S|)); sizes outside feasible_sizes(n) score np.inf."""
    xs = np.arange(n + 1)
    denom = np.minimum(f.values(xs), f.values(n - xs))
    feasible = np.zeros(n + 1, dtype=bool)
    feasible[list(feasible_sizes(n))] = True

    def score(weights: np.ndarray, sizes: np.ndarray) -> np.ndarray:
        out = np.full(len(weights), np.inf)
        ok = feasible[sizes]
        out[ok] = weights[ok] / denom[sizes[ok]]
        return out

    return score


def balanced_f_cut_exact(g: Graph, f: ScalingFunction, cap: int = EXACT_CUT_CAP, jobs: int = 1) -> Cut:
    """Exact minimizer of w(S, V-S) / min(f(|S|), f(|V-S|)) over size-feasible cuts."""
    n = g.n
    if n < 2:
        raise ValidationError(f"a cut needs at least 2 nodes, got {n}")
    f.check_domain(n)
    _, _, side, _ = exact_search(g, balanced_score(f, n), cap=cap, jobs=jobs)
    side_a = frozenset(side)
    side_b = frozenset(range(n)) - side_a
    weight = g.cut_weight(side_a, side_b)
    ratio = weight / min(f(len(side_a)), f(len(side_b)))
    return Cut(side_a, side_b, weight, ratio, objective="balanced-f", certified=True, solver="exact")
