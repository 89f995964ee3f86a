"""
Weighted undirected similarity graph.

Nodes are 0..n-1. Edges are stored canonically as (u, v, w) with u < v and w > 0;
an absent edge has weight 0. Graphs are immutable once built.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx
import numpy as np

from src.utils.errors import ValidationError

Edge = tuple[int, int, float]


@dataclass(frozen=True)
class Graph:
    """
    Undirected weighted graph G = (V, E, w) over nodes 0..n-1.

    Attributes:
        n: Node count
        edges: Canonical edges (u, v, w), u < v, sorted by (u, v)
    """

    n: int
    edges: tuple[Edge, ...] = ()
    _index: dict[tuple[int, int], float] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        if self.n < 0:
            raise ValidationError(f"node count must be nonnegative, got {self.n}")
        index: dict[tuple[int, int], float] = {}
        for u, v, w in self.edges:
            if not (0 <= u < v < self.n):
                raise ValidationError(f"edge ({u}, {v}) is not canonical for n={self.n}")
            if not w > 0:
                raise ValidationError(f"edge ({u}, {v}) has non-positive weight {w}")
            if (u, v) in index:
                raise ValidationError(f"duplicate edge ({u}, {v})")
            index[(u, v)] = float(w)
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[float]]) -> Graph:
        """
        Build a graph from (u, v) or (u, v, w) tuples in any orientation.

        Raises:
            ValidationError: On self-loops, out-of-range ids, non-positive
                weights or duplicate unordered pairs
        """
        canonical: list[Edge] = []
        for edge in edges:
            if len(edge) == 2:
                u, v = edge  # type: ignore[misc]
                w = 1.0
            else:
                u, v, w = edge  # type: ignore[misc]
            u, v = int(u), int(v)
            if u == v:
                raise ValidationError(f"self-loop on node {u}")
            if u > v:
                u, v = v, u
            canonical.append((u, v, float(w)))
        canonical.sort(key=lambda e: (e[0], e[1]))
        return cls(n=n, edges=tuple(canonical))

    @property
    def nodes(self) -> range:
        return range(self.n)

    @property
    def total_weight(self) -> float:
        return sum(w for _, _, w in self.edges)

    @property
    def is_unit_weight(self) -> bool:
        return all(w == 1.0 for _, _, w in self.edges)

    @property
    def max_weight(self) -> float:
        return max((w for _, _, w in self.edges), default=0.0)

    def weight(self, u: int, v: int) -> float:
        """Weight of the unordered pair {u, v} (0 when absent)."""
        if u > v:
            u, v = v, u
        return self._index.get((u, v), 0.0)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, float], ...], ...]:
        """Per-node neighbor lists [(neighbor, weight), ...] sorted by neighbor."""
        lists: list[list[tuple[int, float]]] = [[] for _ in range(self.n)]
        for u, v, w in self.edges:
            lists[u].append((v, w))
            lists[v].append((u, w))
        return tuple(tuple(sorted(adj)) for adj in lists)

    def neighbors(self, u: int) -> tuple[tuple[int, float], ...]:
        return self.adjacency[u]

    def weight_matrix(self) -> np.ndarray:
        """Dense symmetric weight matrix (a fresh copy)."""
        matrix = np.zeros((self.n, self.n), dtype=np.float64)
        for u, v, w in self.edges:
            matrix[u, v] = w
            matrix[v, u] = w
        return matrix

    def cut_weight(self, side_a: Iterable[int], side_b: Iterable[int]) -> float:
        """w(A, B): total weight of edges with one endpoint in each side."""
        a, b = set(side_a), set(side_b)
        return sum(w for u, v, w in self.edges if (u in a and v in b) or (u in b and v in a))

    def multiway_cut_weight(self, parts: Sequence[Iterable[int]]) -> float:
        """w(S_1, ..., S_k): weight of edges whose endpoints lie in different parts."""
        owner: dict[int, int] = {}
        for idx, part in enumerate(parts):
            for node in part:
                owner[node] = idx
        total = 0.0
        for u, v, w in self.edges:
            ou, ov = owner.get(u), owner.get(v)
            if ou is not None and ov is not None and ou != ov:
                total += w
        return total

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_weighted_edges_from(self.edges)
        return graph

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


def complement(g: Graph, c: float = 1.0) -> Graph:
    """
    Complementary graph with w(i,j) + w^c(i,j) = c for every unordered pair.

    Pairs whose complementary weight reaches 0 are omitted.

    Raises:
        ValidationError: If c is smaller than some edge weight of g
    """
    if g.max_weight > c:
        raise ValidationError(
            f"complement constant {c} is below max edge weight {g.max_weight}"
        )
    edges = []
    for u, v in itertools.combinations(range(g.n), 2):
        wc = c - g.weight(u, v)
        if wc > 0:
            edges.append((u, v, wc))
    return Graph(n=g.n, edges=tuple(edges))


def induced_subgraph(g: Graph, subset: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """
    Subgraph induced by `subset`, relabelled to 0..|subset|-1 in increasing id order.

    Returns:
        Tuple (subgraph, old_to_new) where old_to_new maps original ids to new ids

    Raises:
        ValidationError: If subset is empty or contains ids outside 0..n-1
    """
    members = sorted(set(subset))
    if not members:
        raise ValidationError("induced subgraph needs a nonempty node subset")
    if members[0] < 0 or members[-1] >= g.n:
        raise ValidationError(f"subset has ids outside 0..{g.n - 1}")
    old_to_new = {old: new for new, old in enumerate(members)}
    edges = tuple(
        (old_to_new[u], old_to_new[v], w)
        for u, v, w in g.edges
        if u in old_to_new and v in old_to_new
    )
    return Graph(n=len(members), edges=edges), old_to_new


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components ordered by smallest member."""
    parts = [frozenset(c) for c in nx.connected_components(g.to_networkx())]
    return sorted(parts, key=min)


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1
