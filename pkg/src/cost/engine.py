"""
Cost evaluation.

cost_G(T) is evaluated two ways: the edge sum over w_ij * |leaves(T[i v j])| and the
split sum over |S| * w(S_1, ..., S_k). Both are computed and reported so callers can
audit that they agree.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from src.cost.scaling import ScalingFunction
from src.graph import Graph, induced_subgraph
from src.tree import ClusterTree, Split, splits
from src.utils.errors import ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SplitCost:
    split: Split
    cost: float

    def to_json(self) -> dict[str, Any]:
        data = self.split.to_json()
        data["cost"] = self.cost
        return data


@dataclass(frozen=True)
class CostReport:
    """
    Cost of a tree on a graph with its per-split breakdown.

    Attributes:
        total: Sum of per_split costs
        per_split: One entry per internal node, breadth-first from the root
        edge_total: The same cost computed as a sum over edges
        scaling: Spec of the scaling function ("linear" for the plain cost)
    """

    total: float
    per_split: tuple[SplitCost, ...] = ()
    edge_total: float = 0.0
    scaling: str = "linear"
    metadata: dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.total < 0:
            raise ValidationError(f"cost cannot be negative, got {self.total}")

    @property
    def form_difference(self) -> float:
        """edge_total - total; exactly 0 on integer weights."""
        return self.edge_total - self.total

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "total": self.total,
            "edge_total": self.edge_total,
            "form_difference": self.form_difference,
            "scaling": self.scaling,
            "splits": [s.to_json() for s in self.per_split],
        }
        if self.metadata:
            data["metadata"] = dict(self.metadata)
        return data

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _check_leaves(g: Graph, t: ClusterTree) -> None:
    if t.leaves != frozenset(range(g.n)):
        missing = sorted(set(range(g.n)) - t.leaves)
        extra = sorted(t.leaves - set(range(g.n)))
        raise ValidationError(
            f"tree leaves do not match graph nodes 0..{g.n - 1} "
            f"(missing {missing[:10]}, unexpected {extra[:10]})"
        )


def edge_sum(g: Graph, t: ClusterTree, f: ScalingFunction | None = None) -> float:
    """Sum over edges of w_ij * f(|leaves(T[i v j])|)."""
    _check_leaves(g, t)
    scale = f or ScalingFunction.linear()
    if not scale.is_linear:
        scale.check_domain(g.n)
    if not g.edges:
        return 0.0
    sizes = np.fromiter((t.size(t.lca(u, v)) for u, v, _ in g.edges), dtype=np.int64)
    weights = np.fromiter((w for _, _, w in g.edges), dtype=np.float64)
    return float(weights @ scale.values(sizes))


def split_costs(
    g: Graph, t: ClusterTree, f: ScalingFunction | None = None
) -> tuple[SplitCost, ...]:
    """f(|S|) * w(S_1, ..., S_k) for every split of t."""
    _check_leaves(g, t)
    scale = f or ScalingFunction.linear()
    out = []
    for split in splits(t):
        size = split.size if scale.is_linear else scale(split.size)
        out.append(SplitCost(split=split, cost=size * g.multiway_cut_weight(split.parts)))
    return tuple(out)


def generalized_cost(g: Graph, t: ClusterTree, f: ScalingFunction) -> CostReport:
    """
    Generalized cost sum w_ij * f(|leaves(T[i v j])|) with its split breakdown.

    Raises:
        ValidationError: If the leaves of t are not exactly 0..n-1, or a table
            function does not cover n
    """
    if not f.is_linear:
        f.check_domain(g.n)
    per_split = split_costs(g, t, f)
    total = sum(s.cost for s in per_split)
    edge_total = edge_sum(g, t, f)
    logger.debug("cost %s on %r: split form %s, edge form %s", f.spec, g, total, edge_total)
    return CostReport(total=total, per_split=per_split, edge_total=edge_total, scaling=f.spec)


def cost(g: Graph, t: ClusterTree) -> CostReport:
    """cost_G(T) = sum over edges of w_ij * |leaves(T[i v j])|."""
    return generalized_cost(g, t, ScalingFunction.linear())


def restricted_cost(g: Graph, t: ClusterTree, f: ScalingFunction | None = None) -> float:
    """
    Cost of a tree over a subset of the nodes, measured on the induced subgraph.
    """
    sub, old_to_new = induced_subgraph(g, t.leaves)
    relabelled = t.relabel(old_to_new)
    if f is None:
        return cost(sub, relabelled).total
    return generalized_cost(sub, relabelled, f).total


def ultrametric_cost(g: Graph, t: ClusterTree) -> float:
    """Sum of w_ij * d_T(i, j); equals cost_G(T) minus the total edge weight."""
    _check_leaves(g, t)
    return sum(w * (t.size(t.lca(u, v)) - 1) for u, v, w in g.edges)
