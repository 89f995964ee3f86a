"""
Queries and persistent transformations on cluster trees.
"""

from __future__ import annotations

from collections.abc import Iterable
from typing import Any

from src.tree.cluster_tree import ClusterTree, Split
from src.utils.errors import ValidationError


def lca_subtree_size(t: ClusterTree, i: int, j: int) -> int:
    """
    |leaves(T[i v j])|, the size of the smallest subtree containing leaves i and j.

    Raises:
        ValidationError: If i == j (i v i is not defined)
    """
    if i == j:
        raise ValidationError(f"lca_subtree_size needs distinct leaves, got {i} twice")
    return t.size(t.lca(i, j))


def tree_distance(t: ClusterTree, i: int, j: int) -> int:
    """Ultrametric d_T(i, j) = |leaves(T[i v j])| - 1, and 0 when i == j."""
    if i == j:
        t.leaf_node(i)
        return 0
    return t.size(t.lca(i, j)) - 1


def splits(t: ClusterTree) -> list[Split]:
    """One split per internal node, breadth-first from the root."""
    out = []
    for u in t.internal_nodes():
        parts = tuple(t.leaves_of(c) for c in t.node(u).children)
        out.append(Split(parent=frozenset().union(*parts), parts=parts))
    return out


def _nested_with(t: ClusterTree, replacements: dict[int, Any]) -> Any:
    built: dict[int, Any] = {}
    for idx in range(len(t) - 1, -1, -1):
        if idx in replacements:
            built[idx] = replacements[idx]
            continue
        node = t.node(idx)
        built[idx] = node.leaf if node.is_leaf else [built[c] for c in node.children]
    return built[0]


def replace_subtree(t: ClusterTree, u: int, t_u: ClusterTree) -> ClusterTree:
    """
    New tree with T[u] swapped for `t_u`; `t` itself is untouched.

    Raises:
        ValidationError: If t_u's leaves differ from leaves(T[u])
    """
    if not 0 <= u < len(t):
        raise ValidationError(f"node {u} is not in the tree")
    expected = t.leaves_of(u)
    if t_u.leaves != expected:
        raise ValidationError(
            f"replacement leaves {sorted(t_u.leaves)} differ from subtree leaves {sorted(expected)}"
        )
    return ClusterTree.from_nested(_nested_with(t, {u: t_u.to_json()}))


def binarize(t: ClusterTree) -> ClusterTree:
    """
    Binary tree where each k-ary split (S_1, ..., S_k) becomes the left-deep chain
    ((S_1, S_2), S_3), ... in canonical part order. Never increases cost.
    """
    if t.is_binary:
        return t
    built: dict[int, Any] = {}
    for idx in range(len(t) - 1, -1, -1):
        node = t.node(idx)
        if node.is_leaf:
            built[idx] = node.leaf
            continue
        chain = built[node.children[0]]
        for child in node.children[1:]:
            chain = [chain, built[child]]
        built[idx] = chain
    return ClusterTree.from_nested(built[0])


def restrict(t: ClusterTree, subset: Iterable[int]) -> ClusterTree:
    """
    T restricted to the leaves in `subset`: branches with no kept leaf are dropped and
    internal nodes left with a single child collapse into it.

    Raises:
        ValidationError: If no leaf of t lies in subset
    """
    keep = set(subset)
    built: dict[int, Any] = {}
    for idx in range(len(t) - 1, -1, -1):
        node = t.node(idx)
        if node.is_leaf:
            built[idx] = node.leaf if node.leaf in keep else None
            continue
        kids = [built[c] for c in node.children if built[c] is not None]
        if not kids:
            built[idx] = None
        elif len(kids) == 1:
            built[idx] = kids[0]
        else:
            built[idx] = kids
    if built[0] is None:
        raise ValidationError("restriction leaves no leaves")
    return ClusterTree.from_nested(built[0])


def line_chain_tree(n: int) -> ClusterTree:
    """Caterpillar (((0, 1), 2), ..., n-1): always splits off an extremal node."""
    if n < 1:
        raise ValidationError("a tree needs at least one leaf")
    nested: Any = 0
    for leaf in range(1, n):
        nested = [nested, leaf]
    return ClusterTree.from_nested(nested)


def balanced_tree(leaves: Iterable[int]) -> ClusterTree:
    """Tree that splits the sorted leaf list as evenly as possible at each level."""
    ids = sorted(leaves)
    if not ids:
        raise ValidationError("a tree needs at least one leaf")

    def build(lo: int, hi: int) -> Any:
        if hi - lo == 1:
            return ids[lo]
        mid = lo + (hi - lo) // 2
        return [build(lo, mid), build(mid, hi)]

    return ClusterTree.from_nested(build(0, len(ids)))
