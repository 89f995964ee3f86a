"""
Spectral sweep heuristic for sparsest and balanced cuts.

The Fiedler vector comes from power iteration on cI - L with c = 2 * max weighted
degree, which shifts the Laplacian spectrum into [0, c] and makes the second
smallest Laplacian eigenvector the dominant one once the constant vector is
projected out.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from src.config.constants import (
    FIEDLER_RESIDUAL_TOL,
    LOCAL_SEARCH_FACTOR,
    POWER_ITERATION_FACTOR,
    POWER_ITERATION_TOL,
    REL_TOL,
)
from src.cost.scaling import ScalingFunction
from src.cuts.exact import component_cut, feasible_sizes
from src.cuts.types import Cut, Objective
from src.graph import Graph
from src.utils.errors import ValidationError

logger = logging.getLogger(__name__)

# value(cut_weight, size_a) -> objective, math.inf when infeasible
ValueFn = Callable[[float, int], float]


@dataclass(frozen=True)
class FiedlerResult:
    vector: np.ndarray
    eigenvalue: float
    residual: float
    converged: bool
    iterations: int


def laplacian(g: Graph) -> np.ndarray:
    weights = g.weight_matrix()
    return np.diag(weights.sum(axis=1)) - weights


def _residual(lap: np.ndarray, x: np.ndarray) -> float:
    """||L x - (x^T L x) x|| for a unit vector x."""
    return float(np.linalg.norm(lap @ x - float(x @ lap @ x) * x))


def fiedler_vector(g: Graph, seed: int | None = 0) -> FiedlerResult:
    """
    Unit eigenvector of the second smallest Laplacian eigenvalue by deflated power
    iteration (tolerance POWER_ITERATION_TOL, at most POWER_ITERATION_FACTOR * n^2
    steps). Convergence also requires the eigen-residual to be within
    FIEDLER_RESIDUAL_TOL. A non-converged run logs a warning and returns the current
    iterate.
    """
    n = g.n
    if n < 2:
        raise ValidationError(f"the Fiedler vector needs at least 2 nodes, got {n}")
    lap = laplacian(g)
    shift = max(2.0 * float(lap.diagonal().max()), 1.0)
    operator = shift * np.eye(n) - lap

    rng = np.random.default_rng(seed)
    x = rng.standard_normal(n)
    x -= x.mean()
    x /= np.linalg.norm(x)

    max_iter = POWER_ITERATION_FACTOR * n * n
    converged = False
    iterations = 0
    for iterations in range(1, max_iter + 1):
        y = operator @ x
        y -= y.mean()
        norm = np.linalg.norm(y)
        if norm == 0.0:
            # x lies in the kernel of the shifted operator: already an eigenvector
            converged = True
            break
        y /= norm
        delta = np.linalg.norm(y - x)
        x = y
        if delta < POWER_ITERATION_TOL and _residual(lap, x) <= FIEDLER_RESIDUAL_TOL:
            converged = True
            break

    if not converged:
        logger.warning(
            "power iteration did not converge in %d steps on %r; using current iterate",
            max_iter, g,
        )
    eigenvalue = float(x @ lap @ x)
    residual = _residual(lap, x)
    return FiedlerResult(x, eigenvalue, residual, converged, iterations)


def _sweep(g: Graph, order: list[int], value: ValueFn) -> tuple[float, int]:
    """Best prefix cut of `order`; returns (value, prefix length)."""
    n = g.n
    in_a = [False] * n
    weight = 0.0
    best = (math.inf, 0)
    for k, u in enumerate(order[:-1], start=1):
        to_a = sum(w for v, w in g.neighbors(u) if in_a[v])
        to_b = sum(w for v, w in g.neighbors(u) if not in_a[v])
        in_a[u] = True
        weight += to_b - to_a
        val = value(weight, k)
        if val < best[0] and not _same(val, best[0]):
            best = (val, k)
    return best


def _same(a: float, b: float) -> bool:
    return math.isclose(a, b, rel_tol=REL_TOL, abs_tol=0.0)


def _local_search(g: Graph, side: list[bool], value: ValueFn) -> list[bool]:
    """First-improvement single-node moves until no move helps (cap LOCAL_SEARCH_FACTOR * n)."""
    n = g.n
    size_a = sum(side)
    weight = sum(w for u, v, w in g.edges if side[u] != side[v])
    current = value(weight, size_a)
    moves = 0
    improved = True
    while improved and moves < LOCAL_SEARCH_FACTOR * n:
        improved = False
        for u in range(n):
            same = sum(w for v, w in g.neighbors(u) if side[v] == side[u])
            other = sum(w for v, w in g.neighbors(u) if side[v] != side[u])
            new_size = size_a - 1 if side[u] else size_a + 1
            if new_size < 1 or new_size > n - 1:
                continue
            new_weight = weight - other + same
            candidate = value(new_weight, new_size)
            if candidate < current and not _same(candidate, current):
                side[u] = not side[u]
                size_a, weight, current = new_size, new_weight, candidate
                moves += 1
                improved = True
                logger.debug("local search moved node %d, value now %.6g", u, current)
                break
    return side


def heuristic_search(g: Graph, value: ValueFn, seed: int | None = 0) -> frozenset[int]:
    """
    Sweep over the Fiedler order and the weighted-degree order, keep the best prefix,
    then polish with single-node moves. Returns side A (oriented to contain node 0).
    """
    n = g.n
    fiedler = fiedler_vector(g, seed)
    degrees = [sum(w for _, w in g.neighbors(u)) for u in range(n)]
    orders = [
        sorted(range(n), key=lambda u: (fiedler.vector[u], u)),
        sorted(range(n), key=lambda u: (degrees[u], u)),
    ]
    best_val, best_side = math.inf, None
    for order in orders:
        val, k = _sweep(g, order, value)
        if k and (best_side is None or (val < best_val and not _same(val, best_val))):
            best_val, best_side = val, order[:k]
    if best_side is None:
        raise ValidationError("no feasible sweep cut")

    chosen = set(best_side)
    side = _local_search(g, [u in chosen for u in range(n)], value)
    side_a = frozenset(u for u in range(n) if side[u])
    if 0 not in side_a:
        side_a = frozenset(range(n)) - side_a
    return side_a


def sparsest_cut_heuristic(g: Graph, seed: int | None = 0) -> Cut:
    """
    Uncertified sparsest cut: spectral sweep plus local search. A disconnected graph
    returns (component of node 0, rest) at ratio 0.

    Raises:
        ValidationError: If n < 2
    """
    n = g.n
    if n < 2:
        raise ValidationError(f"a cut needs at least 2 nodes, got {n}")
    shortcut = component_cut(g, "sparsest", "spectral")
    if shortcut is not None:
        return shortcut
    side_a = heuristic_search(g, lambda w, s: w / (s * (n - s)), seed)
    side_b = frozenset(range(n)) - side_a
    weight = g.cut_weight(side_a, side_b)
    return Cut(
        side_a, side_b, weight, weight / (len(side_a) * len(side_b)),
        objective="sparsest", certified=False, solver="spectral",
    )


def balanced_f_cut_heuristic(g: Graph, f: ScalingFunction, seed: int | None = 0) -> Cut:
    """The sweep and local search restricted to size-feasible cuts."""
    n = g.n
    if n < 2:
        raise ValidationError(f"a cut needs at least 2 nodes, got {n}")
    f.check_domain(n)
    allowed = set(feasible_sizes(n))

    def value(weight: float, size: int) -> float:
        if size not in allowed:
            return math.inf
        return weight / min(f(size), f(n - size))

    side_a = heuristic_search(g, value, seed)
    side_b = frozenset(range(n)) - side_a
    weight = g.cut_weight(side_a, side_b)
    objective: Objective = "balanced-f"
    return Cut(
        side_a, side_b, weight, weight / min(f(len(side_a)), f(len(side_b))),
        objective=objective, certified=False, solver="spectral",
    )
