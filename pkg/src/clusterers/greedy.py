"""
Top-down greedy clustering: split by a sparsest (or balanced f-) cut and recurse.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any

from src.cost.scaling import ScalingFunction
from src.cuts import Cut, balanced_f_cut, resolve_mode, sparsest_cut
from src.graph import Graph, induced_subgraph
from src.tree import ClusterTree
from src.utils.errors import ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GreedyOutcome:
    """
    Attributes:
        tree: The binary tree built top-down
        certified: True when every split came from exact enumeration
        solvers_used: Distinct solver names in first-use order
    """

    tree: ClusterTree
    certified: bool
    solvers_used: tuple[str, ...] = ()
    splits_made: int = 0
    metadata: dict[str, Any] = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict[str, Any]:
        return {
            "tree": self.tree.to_json(),
            "certified": self.certified,
            "solvers": list(self.solvers_used),
            **self.metadata,
        }


def _cut(sub: Graph, mode: str, seed: int | None, f: ScalingFunction | None) -> Cut:
    if f is None:
        return sparsest_cut(sub, mode, seed)
    return balanced_f_cut(sub, f, mode, seed)


def run_greedy(
    g: Graph,
    cut: str = "auto",
    seed: int | None = 0,
    f: ScalingFunction | None = None,
) -> GreedyOutcome:
    """
    Build a binary tree by recursive splitting.

    Each node set S with |S| >= 2 is split by the cut solver run on the subgraph
    induced by S, then both sides are processed the same way. With `f` the balanced
    f-cut criterion replaces the sparsest cut.

    Args:
        g: Similarity graph
        cut: "exact", "heuristic" or "auto" (exact up to the enumeration cap)
        seed: Seed for the heuristic solver
        f: Scaling function for the generalized criterion

    Raises:
        ValidationError: If g has no nodes or the cut mode is unknown
    """
    if g.n < 1:
        raise ValidationError("cannot cluster an empty graph")
    resolve_mode(cut, g.n)
    if f is not None:
        f.check_domain(g.n)

    built: dict[tuple[int, ...], Any] = {}
    solvers: list[str] = []
    certified = True
    splits_made = 0
    root = tuple(range(g.n))
    stack: list[tuple[tuple[int, ...], bool]] = [(root, False)]
    children: dict[tuple[int, ...], tuple[tuple[int, ...], tuple[int, ...]]] = {}

    while stack:
        members, expanded = stack.pop()
        if len(members) == 1:
            built[members] = members[0]
            continue
        if expanded:
            left, right = children.pop(members)
            built[members] = [built.pop(left), built.pop(right)]
            continue

        sub, old_to_new = induced_subgraph(g, members)
        new_to_old = {new: old for old, new in old_to_new.items()}
        result = _cut(sub, cut, seed, f)
        if result.solver not in solvers:
            solvers.append(result.solver)
            if not result.certified:
                logger.warning(
                    "heuristic cut used on %d nodes; the tree is not certified", len(members)
                )
        certified = certified and result.certified
        splits_made += 1

        left = tuple(sorted(new_to_old[u] for u in result.side_a))
        right = tuple(sorted(new_to_old[u] for u in result.side_b))
        logger.debug(
            "split %d nodes into %d | %d (weight %.6g, ratio %.6g)",
            len(members), len(left), len(right), result.weight, result.ratio,
        )
        children[members] = (left, right)
        stack.append((members, True))
        stack.append((right, False))
        stack.append((left, False))

    tree = ClusterTree.from_nested(built[root])
    return GreedyOutcome(
        tree=tree,
        certified=certified,
        solvers_used=tuple(solvers),
        splits_made=splits_made,
        metadata={"cut_mode": cut, "seed": seed, "scaling": f.spec if f else None},
    )


def make_tree(g: Graph, cut: str = "auto", seed: int | None = 0) -> ClusterTree:
    """Greedy sparsest-cut tree."""
    return run_greedy(g, cut=cut, seed=seed).tree


def make_tree_generalized(
    g: Graph, f: ScalingFunction, mode: str = "exact", seed: int | None = 0
) -> ClusterTree:
    """Greedy tree under the balanced f-cut criterion."""
    return run_greedy(g, cut=mode, seed=seed, f=f).tree
