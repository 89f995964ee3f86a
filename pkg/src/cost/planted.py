"""
Planted partition models and the cost quantities defined over them.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from typing import Any, Literal

import numpy as np

from src.config.constants import REL_TOL
from src.cost.engine import cost
from src.graph import Graph
from src.tree import ClusterTree, Split, balanced_tree, splits
from src.utils.errors import ValidationError


@dataclass(frozen=True)
class PlantedModel:
    """
    Parameters of a planted partition model.

    simple: n even, clusters L = {0..n/2-1} and R = {n/2..n-1}, in-cluster edge
    probability p, cross-cluster q, 0 <= q < p <= 1.

    general: per-node cluster ids and a symmetric probability matrix whose in-cluster
    entries are strictly above the background probability q.
    """

    kind: Literal["simple", "general"]
    n: int
    q: float
    p: float = 0.0
    assignment: tuple[int, ...] = ()
    prob_matrix: np.ndarray | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not 0.0 <= self.q <= 1.0:
            raise ValidationError(f"q must lie in [0, 1], got {self.q}")
        if self.kind == "simple":
            if self.n < 2 or self.n % 2:
                raise ValidationError(f"simple planted model needs even n >= 2, got {self.n}")
            if not (self.q < self.p <= 1.0):
                raise ValidationError(f"simple planted model needs q < p <= 1, got p={self.p}, q={self.q}")
            object.__setattr__(self, "assignment", tuple(0 if i < self.n // 2 else 1 for i in range(self.n)))
            return
        if self.kind != "general":
            raise ValidationError(f"unknown planted model kind {self.kind!r}")
        if len(self.assignment) != self.n or self.n < 1:
            raise ValidationError("general planted model needs one cluster id per node")
        matrix = self.prob_matrix
        if matrix is None or matrix.shape != (self.n, self.n):
            raise ValidationError("general planted model needs an n x n probability matrix")
        for i, j in itertools.combinations(range(self.n), 2):
            if self.assignment[i] != self.assignment[j]:
                continue
            pij = float(matrix[i, j])
            if not (self.q < pij <= 1.0):
                raise ValidationError(
                    f"in-cluster probability for ({i}, {j}) must lie in (q, 1], got {pij}"
                )

    @classmethod
    def simple(cls, n: int, p: float, q: float) -> PlantedModel:
        return cls(kind="simple", n=n, p=float(p), q=float(q))

    @classmethod
    def general(
        cls,
        assignment: Sequence[int],
        in_prob: float | Callable[[int, int], float],
        q: float,
    ) -> PlantedModel:
        """
        Build a general model.

        Args:
            assignment: Cluster id of each node
            in_prob: Constant in-cluster probability, or a function of the node pair
            q: Background probability for cross-cluster pairs
        """
        n = len(assignment)
        matrix = np.full((n, n), float(q))
        for i, j in itertools.combinations(range(n), 2):
            if assignment[i] == assignment[j]:
                pij = in_prob(i, j) if callable(in_prob) else in_prob
                matrix[i, j] = matrix[j, i] = float(pij)
        np.fill_diagonal(matrix, 0.0)
        return cls(kind="general", n=n, q=float(q), assignment=tuple(assignment), prob_matrix=matrix)

    @property
    def clusters(self) -> list[frozenset[int]]:
        """Ground-truth clusters ordered by smallest member."""
        groups: dict[int, set[int]] = {}
        for node, cid in enumerate(self.assignment):
            groups.setdefault(cid, set()).add(node)
        return sorted((frozenset(g) for g in groups.values()), key=min)

    def edge_probability(self, i: int, j: int) -> float:
        if i == j:
            return 0.0
        if self.kind == "simple":
            return self.p if self.assignment[i] == self.assignment[j] else self.q
        return float(self.prob_matrix[i, j])  # type: ignore[index]

    def excess_graph(self) -> Graph:
        """H: in-cluster pairs weighted Pr(edge) - q; no cross-cluster edges."""
        edges = []
        for i, j in itertools.combinations(range(self.n), 2):
            if self.assignment[i] == self.assignment[j]:
                edges.append((i, j, self.edge_probability(i, j) - self.q))
        return Graph(n=self.n, edges=tuple(edges))

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"kind": self.kind, "n": self.n, "q": self.q}
        if self.kind == "simple":
            data["p"] = self.p
        data["clusters"] = [sorted(c) for c in self.clusters]
        return data


def expected_planted_cost(m: PlantedModel, t: ClusterTree) -> float:
    """
    E[cost_G(T)] = q (n^3 - n) / 3 + cost_H(T), with H the excess graph of the model.

    Raises:
        ValidationError: If the leaves of t are not exactly 0..n-1
    """
    return m.q * (m.n**3 - m.n) / 3 + cost(m.excess_graph(), t).total


def two_clique_optimum(l: int, r: int) -> int:
    """C(l, r) = (l^3 - l)/3 + (r^3 - r)/3, the optimal cost of two disjoint cliques."""
    if l < 0 or r < 0:
        raise ValidationError(f"clique sizes must be nonnegative, got {l}, {r}")
    return (l**3 - l) // 3 + (r**3 - r) // 3


def excess_lower_bound(split: Split, l: int, r: int) -> int:
    """
    l1*l2*r + r1*r2*l: the guaranteed excess over C(l, r) of any tree on H(l, r)
    whose top split is `split`. H(l, r) has L = {0..l-1} and R = {l..l+r-1}.

    Raises:
        ValidationError: If split is not a bipartition of 0..l+r-1
    """
    if split.arity != 2:
        raise ValidationError(f"excess bound needs a two-way split, got {split.arity} parts")
    if split.parent != frozenset(range(l + r)):
        raise ValidationError(f"split does not partition the nodes of H({l}, {r})")
    first, second = split.parts
    l1 = sum(1 for v in first if v < l)
    l2 = sum(1 for v in second if v < l)
    r1 = len(first) - l1
    r2 = len(second) - l2
    return l1 * l2 * r + r1 * r2 * l


def _misplaced_ok(
    side_a: frozenset[int], side_b: frozenset[int], left: frozenset[int], right: frozenset[int], bound: float
) -> bool:
    ok = len(side_a & left) <= bound and len(side_b & right) <= bound
    swapped = len(side_b & left) <= bound and len(side_a & right) <= bound
    return ok or swapped


def epsilon_good(
    t: ClusterTree, left: Iterable[int], right: Iterable[int], eps: float
) -> tuple[bool, Split | None]:
    """
    Whether t contains a split S -> (S_1, S_2) with
    |S & L|, |S & R| >= (1 - eps) n/2 and |S_1 & L|, |S_2 & R| <= eps n/2 (or swapped).

    k-ary splits are checked with every part against the union of the others. Splits
    are scanned breadth-first from the root and the first witness is returned.

    Returns:
        Tuple (good, witness_split)

    Raises:
        ValidationError: If |L| != |R|, L and R overlap or miss leaves, or eps
            lies outside [0, 1]
    """
    left_set, right_set = frozenset(left), frozenset(right)
    if len(left_set) != len(right_set):
        raise ValidationError(f"|L| = {len(left_set)} differs from |R| = {len(right_set)}")
    if left_set & right_set or left_set | right_set != t.leaves:
        raise ValidationError("L and R must partition the leaves of the tree")
    if not -REL_TOL <= eps <= 1 + REL_TOL:
        raise ValidationError(f"eps must lie in [0, 1], got {eps}")

    n = len(left_set) + len(right_set)
    low = (1 - eps) * n / 2 - REL_TOL
    high = eps * n / 2 + REL_TOL
    for split in splits(t):
        parent = split.parent
        if len(parent & left_set) < low or len(parent & right_set) < low:
            continue
        for part in split.parts:
            rest = parent - part
            if _misplaced_ok(part, rest, left_set, right_set, high):
                return True, split
    return False, None


def laminar_tree(clusters: Sequence[Iterable[int]]) -> ClusterTree:
    """Tree whose top split separates the clusters, each cluster split evenly below."""
    subtrees = [balanced_tree(c).to_json() for c in clusters]
    return ClusterTree.from_nested(subtrees[0] if len(subtrees) == 1 else subtrees)


def planted_gap_bound(n: int, p: float, q: float, eps: float) -> float:
    """eps (p - q) n^3 / 16, the expected-cost gap of any tree that is not eps-good."""
    return eps * (p - q) * n**3 / 16


def recovery_epsilon(n: int, p: float, q: float, delta: float) -> float:
    """
    The eps for which the optimal tree is eps-good with probability >= 1 - delta:
    16/(p-q) * sqrt(2 ln(2n)/n + ln(2/delta)/n^2). Only meaningful when <= 1/6.
    """
    if not p > q:
        raise ValidationError(f"need p > q, got p={p}, q={q}")
    if not 0 < delta < 1:
        raise ValidationError(f"delta must lie in (0, 1), got {delta}")
    return 16 / (p - q) * math.sqrt(2 * math.log(2 * n) / n + math.log(2 / delta) / n**2)
