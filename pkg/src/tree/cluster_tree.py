"""
Cluster tree data types.

A ClusterTree is an immutable arena of nodes built in canonical preorder: the
children of every internal node are ordered by their smallest leaf id, so two trees
are equal exactly when their canonical nested forms match.
"""

from __future__ import annotations

import json
import numbers
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Any, Union

from src.utils.errors import ValidationError

# A nested tree spec: a leaf id, or a sequence of >= 2 nested specs
Nested = Union[int, Sequence["Nested"]]
# Canonical form: leaf id or tuple of canonical children ordered by smallest leaf
CanonicalNested = Union[int, tuple["CanonicalNested", ...]]


@dataclass(frozen=True)
class Split:
    """
    A split S -> (S_1, ..., S_k) at an internal node.

    Attributes:
        parent: The node set S
        parts: Disjoint nonempty parts, ordered by smallest member, union S
    """

    parent: frozenset[int]
    parts: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.parts) < 2:
            raise ValidationError("a split needs at least two parts")
        seen: set[int] = set()
        for part in self.parts:
            if not part:
                raise ValidationError("split parts must be nonempty")
            if seen & part:
                raise ValidationError("split parts must be disjoint")
            seen |= part
        if seen != self.parent:
            raise ValidationError("split parts must cover the parent set exactly")

    @classmethod
    def of(cls, parts: Iterable[Iterable[int]]) -> Split:
        """Build a split from its parts, putting them in canonical order."""
        frozen = sorted((frozenset(p) for p in parts), key=lambda p: min(p) if p else -1)
        parent: frozenset[int] = frozenset().union(*frozen) if frozen else frozenset()
        return cls(parent=parent, parts=tuple(frozen))

    @property
    def arity(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return len(self.parent)

    def to_json(self) -> dict[str, Any]:
        return {"set": sorted(self.parent), "parts": [sorted(p) for p in self.parts]}


@dataclass(frozen=True)
class TreeNode:
    """One arena slot. Leaves have no children and carry a leaf id."""

    children: tuple[int, ...]
    leaf: int | None
    size: int
    min_leaf: int

    @property
    def is_leaf(self) -> bool:
        return self.leaf is not None


def _is_leaf_spec(obj: Any) -> bool:
    return isinstance(obj, numbers.Integral) and not isinstance(obj, bool)


def canonicalize(nested: Nested) -> CanonicalNested:
    """
    Canonical nested form: children sorted by smallest leaf id.

    Raises:
        ValidationError: On internal nodes with fewer than two children or
            non-integer leaves
    """
    # iterative post-order so deep chains do not hit the recursion limit
    results: list[tuple[CanonicalNested, int]] = []
    stack: list[tuple[Any, bool]] = [(nested, False)]
    while stack:
        obj, expanded = stack.pop()
        if _is_leaf_spec(obj):
            results.append((int(obj), int(obj)))
            continue
        if isinstance(obj, (str, bytes)) or not isinstance(obj, Sequence):
            raise ValidationError(f"invalid tree element {obj!r}")
        if not expanded:
            if len(obj) < 2:
                raise ValidationError("internal tree nodes need at least two children")
            stack.append((obj, True))
            for child in reversed(obj):
                stack.append((child, False))
            continue
        k = len(obj)
        kids = results[-k:]
        del results[-k:]
        kids.sort(key=lambda item: item[1])
        results.append((tuple(item[0] for item in kids), kids[0][1]))
    return results[0][0]


def order_key(canonical: CanonicalNested) -> tuple:
    """
    Sort key defining the canonical tree order: a leaf sorts as (0, id), an internal
    node as (1, keys of its canonical children). Comparing keys is lexicographic over
    the canonical preorder.
    """
    if isinstance(canonical, int):
        return (0, canonical)
    return (1, tuple(order_key(child) for child in canonical))


class ClusterTree:
    """
    Rooted tree whose leaves carry distinct graph-node ids.

    Every internal node has at least two children and caches its leaf count, so
    |leaves(T[u])| is O(1). The root is always arena index 0.
    """

    __slots__ = ("_nodes", "_parent", "_depth", "_leaf_node", "_canonical")

    def __init__(self, canonical: CanonicalNested):
        nodes: list[list[Any]] = []  # [children(list), leaf]
        parent: list[int] = []
        depth: list[int] = []
        stack: list[tuple[CanonicalNested, int]] = [(canonical, -1)]
        while stack:
            obj, par = stack.pop()
            idx = len(nodes)
            if isinstance(obj, int):
                nodes.append([[], obj])
            else:
                nodes.append([[], None])
                # reversed push keeps preorder = canonical child order
                for child in reversed(obj):
                    stack.append((child, idx))
            parent.append(par)
            depth.append(0 if par < 0 else depth[par] + 1)
            if par >= 0:
                nodes[par][0].append(idx)

        sizes = [0] * len(nodes)
        mins = [0] * len(nodes)
        for idx in range(len(nodes) - 1, -1, -1):
            children, leaf = nodes[idx]
            if leaf is not None:
                sizes[idx] = 1
                mins[idx] = leaf
            else:
                sizes[idx] = sum(sizes[c] for c in children)
                mins[idx] = min(mins[c] for c in children)

        leaf_node: dict[int, int] = {}
        for idx, (_, leaf) in enumerate(nodes):
            if leaf is not None:
                if leaf in leaf_node:
                    raise ValidationError(f"leaf id {leaf} appears twice")
                leaf_node[leaf] = idx

        self._nodes = tuple(
            TreeNode(children=tuple(ch), leaf=leaf, size=sizes[i], min_leaf=mins[i])
            for i, (ch, leaf) in enumerate(nodes)
        )
        self._parent = tuple(parent)
        self._depth = tuple(depth)
        self._leaf_node = leaf_node
        self._canonical = canonical

    # ------------------------------------------------------------------
    # Construction / serialization
    # ------------------------------------------------------------------

    @classmethod
    def from_nested(cls, nested: Nested) -> ClusterTree:
        """Build from nested leaf-id sequences, e.g. [[0, 1], [2, 3]]."""
        return cls(canonicalize(nested))

    @classmethod
    def leaf_tree(cls, leaf: int) -> ClusterTree:
        return cls(int(leaf))

    @classmethod
    def star(cls, leaves: Iterable[int]) -> ClusterTree:
        ids = sorted(leaves)
        if len(ids) == 1:
            return cls.leaf_tree(ids[0])
        return cls.from_nested(ids)

    @classmethod
    def from_json(cls, data: str | list | int) -> ClusterTree:
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as e:
                raise ValidationError(f"invalid tree JSON: {e}")
        return cls.from_nested(data)

    def to_nested(self) -> CanonicalNested:
        return self._canonical

    def to_json(self) -> Any:
        """Nested lists of leaf ids, e.g. [[0, 1], [2, 3]]."""
        built: dict[int, Any] = {}
        for idx in range(len(self._nodes) - 1, -1, -1):
            node = self._nodes[idx]
            built[idx] = node.leaf if node.is_leaf else [built[c] for c in node.children]
        return built[0]

    def to_newick(self) -> str:
        """Newick string with leaf labels vK and no branch lengths."""
        built: dict[int, str] = {}
        for idx in range(len(self._nodes) - 1, -1, -1):
            node = self._nodes[idx]
            if node.is_leaf:
                built[idx] = f"v{node.leaf}"
            else:
                built[idx] = "(" + ",".join(built[c] for c in node.children) + ")"
        return built[0] + ";"

    # ------------------------------------------------------------------
    # Structure accessors
    # ------------------------------------------------------------------

    @property
    def root(self) -> int:
        return 0

    @property
    def nodes(self) -> tuple[TreeNode, ...]:
        return self._nodes

    def node(self, u: int) -> TreeNode:
        return self._nodes[u]

    def parent(self, u: int) -> int:
        return self._parent[u]

    def depth(self, u: int) -> int:
        return self._depth[u]

    def size(self, u: int) -> int:
        """|leaves(T[u])| from the cache."""
        return self._nodes[u].size

    @property
    def n_leaves(self) -> int:
        return self._nodes[0].size

    @property
    def leaves(self) -> frozenset[int]:
        return frozenset(self._leaf_node)

    def leaf_node(self, leaf: int) -> int:
        try:
            return self._leaf_node[leaf]
        except KeyError:
            raise ValidationError(f"leaf {leaf} is not in the tree")

    def leaves_of(self, u: int) -> frozenset[int]:
        out: list[int] = []
        stack = [u]
        while stack:
            node = self._nodes[stack.pop()]
            if node.is_leaf:
                out.append(node.leaf)  # type: ignore[arg-type]
            else:
                stack.extend(node.children)
        return frozenset(out)

    def internal_nodes(self) -> list[int]:
        """Internal node indices in breadth-first order from the root."""
        order: list[int] = []
        queue = deque([0])
        while queue:
            u = queue.popleft()
            node = self._nodes[u]
            if not node.is_leaf:
                order.append(u)
                queue.extend(node.children)
        return order

    def order_key(self) -> tuple:
        """Position of this tree in the canonical tree order."""
        return order_key(self.to_nested())

    @property
    def is_binary(self) -> bool:
        return all(len(n.children) == 2 for n in self._nodes if not n.is_leaf)

    def lca(self, i: int, j: int) -> int:
        """Arena index of the lowest common ancestor of leaves i and j."""
        a, b = self.leaf_node(i), self.leaf_node(j)
        while self._depth[a] > self._depth[b]:
            a = self._parent[a]
        while self._depth[b] > self._depth[a]:
            b = self._parent[b]
        while a != b:
            a, b = self._parent[a], self._parent[b]
        return a

    def subtree(self, u: int) -> ClusterTree:
        """T[u] as a standalone tree (leaf ids unchanged)."""
        built: dict[int, CanonicalNested] = {}
        order = [u]
        stack = [u]
        while stack:
            v = stack.pop()
            children = self._nodes[v].children
            order.extend(children)
            stack.extend(children)
        for v in reversed(order):
            node = self._nodes[v]
            built[v] = node.leaf if node.is_leaf else tuple(built[c] for c in node.children)  # type: ignore[assignment]
        return ClusterTree(built[u])

    def relabel(self, mapping: dict[int, int]) -> ClusterTree:
        """Rename every leaf through `mapping` (must be injective on the leaves)."""
        built: dict[int, Any] = {}
        for idx in range(len(self._nodes) - 1, -1, -1):
            node = self._nodes[idx]
            built[idx] = mapping[node.leaf] if node.is_leaf else [built[c] for c in node.children]  # type: ignore[index]
        return ClusterTree.from_nested(built[0])

    # ------------------------------------------------------------------
    # Dunder
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClusterTree):
            return NotImplemented
        return self._canonical == other._canonical

    def __hash__(self) -> int:
        return hash(self._canonical)

    def __len__(self) -> int:
        return len(self._nodes)

    def __repr__(self) -> str:
        return f"ClusterTree({self.to_newick()})"
