"""
Exact optimal-tree oracles for small graphs.

Binary trees suffice for optimality, and the cost of a binary tree splits as
f(|S|) * w(A, B) at the root plus the costs of the two subtrees, so the optimum over
all trees is a dynamic program over node subsets:

    OPT(S) = min over bipartitions (A, B) of S of  f(|S|) w(A, B) + OPT(A) + OPT(B)

Subsets are bitmasks; A always holds the lowest set bit of S. Among equal values
the tree first in canonical tree order (see order_key) wins, so the DP and the
exhaustive search return the same tree.
"""

from __future__ import annotations

import logging
import math
import operator
from collections.abc import Callable
from typing import Any

from src.config.constants import BRUTEFORCE_CAP, REL_TOL
from src.cost.engine import cost, generalized_cost
from src.cost.scaling import ScalingFunction
from src.graph import Graph
from src.tree import ClusterTree, enumerate_trees
from src.utils.errors import CapacityError, ValidationError

logger = logging.getLogger(__name__)


def _internal_weights(g: Graph) -> list[float]:
    """Total edge weight inside every node subset, indexed by bitmask."""
    n = g.n
    inside = [0.0] * (1 << n)
    dense = [[0.0] * n for _ in range(n)]
    for u, v, w in g.edges:
        dense[u][v] = dense[v][u] = w
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        gain = sum(dense[low][v] for v in range(n) if rest >> v & 1)
        inside[mask] = inside[rest] + gain
    return inside


def _same_value(a: float, b: float) -> bool:
    return math.isclose(a, b, rel_tol=REL_TOL, abs_tol=REL_TOL)


def _preferred(
    value: float, key: tuple, best: float, best_key: tuple, better: Callable[[float, float], bool]
) -> bool:
    if _same_value(value, best):
        return key < best_key
    return better(value, best)


def _subset_dp(
    g: Graph, f: ScalingFunction | None, better: Callable[[float, float], bool]
) -> ClusterTree:
    n = g.n
    if n < 1:
        raise ValidationError("cannot build a tree on an empty graph")
    if n > BRUTEFORCE_CAP:
        raise CapacityError("brute-force optimal tree", n, BRUTEFORCE_CAP)
    scale = f or ScalingFunction.linear()
    scale.check_domain(n)

    inside = _internal_weights(g)
    full = (1 << n) - 1
    best = [0.0] * (1 << n)
    choice = [0] * (1 << n)
    keys: list[tuple] = [()] * (1 << n)
    for v in range(n):
        keys[1 << v] = (0, v)
    # process masks by popcount so both halves are ready
    for mask in sorted(range(1, full + 1), key=lambda m: m.bit_count()):
        size = mask.bit_count()
        if size == 1:
            continue
        low = mask & -mask
        rest = mask ^ low
        factor = scale(size)
        found = False
        sub = 0
        # A = low + every submask of rest except rest itself
        while True:
            a = low | sub
            if a != mask:
                b = mask ^ a
                cut_weight = inside[mask] - inside[a] - inside[b]
                value = factor * cut_weight + best[a] + best[b]
                key = (1, (keys[a], keys[b]))
                if not found or _preferred(value, key, best[mask], keys[mask], better):
                    best[mask], choice[mask], keys[mask], found = value, a, key, True
            if sub == rest:
                break
            sub = (sub - rest) & rest
    return _build_tree(full, choice)


def _build_tree(full: int, choice: list[int]) -> ClusterTree:
    built: dict[int, Any] = {}
    stack = [(full, False)]
    while stack:
        mask, expanded = stack.pop()
        if mask & (mask - 1) == 0:
            built[mask] = mask.bit_length() - 1
            continue
        a = choice[mask]
        b = mask ^ a
        if expanded:
            built[mask] = [built[a], built[b]]
            continue
        stack.extend([(mask, True), (b, False), (a, False)])
    return ClusterTree.from_nested(built[full])


def optimal_tree_bruteforce(
    g: Graph, f: ScalingFunction | None = None
) -> tuple[ClusterTree, float]:
    """
    A tree minimizing the (generalized) cost, with its cost.

    Raises:
        CapacityError: If n exceeds BRUTEFORCE_CAP
    """
    tree = _subset_dp(g, f, operator.lt)
    total = cost(g, tree).total if f is None else generalized_cost(g, tree, f).total
    return tree, total


def max_tree_bruteforce(g: Graph, weighted: bool = False) -> tuple[ClusterTree, float]:
    """
    A binary tree maximizing cost, with its cost. Over non-binary trees the star
    would win trivially.

    Unit-weight graphs only, unless weighted=True (the reduction graphs carry heavy
    literal-pair edges).

    Raises:
        ValidationError: If g has a non-unit edge weight and weighted is False
        CapacityError: If n exceeds BRUTEFORCE_CAP
    """
    if not weighted and not g.is_unit_weight:
        raise ValidationError("maximum-cost oracle only accepts unit-weight graphs; pass weighted=True")
    tree = _subset_dp(g, None, operator.gt)
    return tree, cost(g, tree).total


def optimal_tree_exhaustive(
    g: Graph, f: ScalingFunction | None = None
) -> tuple[ClusterTree, float]:
    """Minimum over every enumerated binary tree; ties go to the first tree in canonical order."""
    best_tree: ClusterTree | None = None
    best_cost = 0.0
    for tree in enumerate_trees(g.n):
        value = cost(g, tree).total if f is None else generalized_cost(g, tree, f).total
        if best_tree is None or _preferred(
            value, tree.order_key(), best_cost, best_tree.order_key(), operator.lt
        ):
            best_tree, best_cost = tree, value
    assert best_tree is not None
    return best_tree, best_cost


def line_costs(n: int) -> list[int]:
    """C(0..n) for the unit line: C(1) = 0, C(k) = k + min_j C(j) + C(k - j)."""
    table = [0] * (n + 1)
    for k in range(2, n + 1):
        table[k] = k + min(table[j] + table[k - j] for j in range(1, k))
    return table


def optimal_line_tree(n: int) -> tuple[ClusterTree, int]:
    """
    Optimal tree on the unit line 0 - 1 - ... - (n-1) by dynamic programming over
    contiguous segments. Segment cost depends only on length; among optimal split
    points the most even one is taken.
    """
    if n < 1:
        raise ValidationError(f"a line needs n >= 1, got {n}")
    table = line_costs(n)

    def split_point(k: int) -> int:
        return min(range(1, k), key=lambda j: (table[j] + table[k - j], abs(k - 2 * j), j))

    built: dict[tuple[int, int], Any] = {}
    stack = [((0, n), False)]
    while stack:
        (lo, hi), expanded = stack.pop()
        if hi - lo == 1:
            built[(lo, hi)] = lo
            continue
        mid = lo + split_point(hi - lo)
        if expanded:
            built[(lo, hi)] = [built[(lo, mid)], built[(mid, hi)]]
            continue
        stack.extend([((lo, hi), True), ((mid, hi), False), ((lo, mid), False)])
    return ClusterTree.from_nested(built[(0, n)]), table[n]
