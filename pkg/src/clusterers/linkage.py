"""
Agglomerative baselines that merge on similarities directly.

single: max pairwise similarity, complete: min, average: mean over all cross pairs.
Absent edges have similarity 0. The pair with the highest linkage is merged; ties go
to the pair whose smallest leaf ids are lexicographically smallest.
"""

from __future__ import annotations

import logging
from typing import Any, Literal

import numpy as np

from src.graph import Graph
from src.tree import ClusterTree
from src.utils.errors import ValidationError

logger = logging.getLogger(__name__)

LinkageMethod = Literal["single", "average", "complete"]
LINKAGE_METHODS: tuple[str, ...] = ("single", "average", "complete")


def linkage(g: Graph, method: str = "average") -> ClusterTree:
    """
    Binary tree from n - 1 greedy merges.

    Raises:
        ValidationError: On an unknown method or an empty graph
    """
    if method not in LINKAGE_METHODS:
        raise ValidationError(
            f"unknown linkage method {method!r} (expected one of {', '.join(LINKAGE_METHODS)})"
        )
    n = g.n
    if n < 1:
        raise ValidationError("cannot cluster an empty graph")
    if n == 1:
        return ClusterTree.leaf_tree(0)

    # for average linkage `link` holds total cross weight; the score divides by sizes
    link = g.weight_matrix()
    sizes = np.ones(n, dtype=np.int64)
    reps = list(range(n))
    nested: list[Any] = list(range(n))
    active = np.ones(n, dtype=bool)

    for step in range(n - 1):
        idx = np.flatnonzero(active)
        block = link[np.ix_(idx, idx)]
        if method == "average":
            block = block / np.outer(sizes[idx], sizes[idx])
        mask = np.triu(np.ones_like(block, dtype=bool), k=1)
        top = block[mask].max()
        rows, cols = np.nonzero(mask & (block == top))
        pairs = sorted(
            (min(reps[idx[r]], reps[idx[c]]), max(reps[idx[r]], reps[idx[c]]), idx[r], idx[c])
            for r, c in zip(rows, cols)
        )
        _, _, i, j = pairs[0]
        i, j = int(i), int(j)

        if method == "single":
            merged = np.maximum(link[i], link[j])
        elif method == "complete":
            merged = np.minimum(link[i], link[j])
        else:
            merged = link[i] + link[j]
        link[i, :] = merged
        link[:, i] = merged
        link[i, i] = 0.0
        active[j] = False
        link[j, :] = 0.0
        link[:, j] = 0.0

        nested[i] = [nested[i], nested[j]]
        sizes[i] += sizes[j]
        reps[i] = min(reps[i], reps[j])
        logger.debug("%s linkage step %d: merged clusters at %d and %d (score %.6g)", method, step, i, j, top)

    root = int(np.flatnonzero(active)[0])
    return ClusterTree.from_nested(nested[root])
