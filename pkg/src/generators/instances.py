"""
Instance generators: lines, cliques, two-clique graphs, planted partitions and
Erdos-Renyi graphs.

Every randomized generator takes either an integer seed or a numpy Generator.
Independent streams come from derive_rng(seed, stream), which spawns child
SeedSequences of numpy's PCG64 so results reproduce across platforms.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Callable, Sequence
from typing import Any

import numpy as np

from src.cost.planted import PlantedModel
from src.graph import Graph, is_connected
from src.utils.errors import ValidationError

logger = logging.getLogger(__name__)

SeedLike = int | np.random.Generator | None


def derive_rng(seed: int | None, stream: int = 0) -> np.random.Generator:
    """Generator for the `stream`-th child of SeedSequence(seed)."""
    if stream < 0:
        raise ValidationError(f"stream index must be nonnegative, got {stream}")
    children = np.random.SeedSequence(seed).spawn(stream + 1)
    return np.random.default_rng(children[stream])


def _rng(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return derive_rng(seed, 0)


def gen_line(n: int) -> Graph:
    """Path 0 - 1 - ... - (n-1) with unit weights."""
    if n < 1:
        raise ValidationError(f"a line needs n >= 1, got {n}")
    return Graph(n=n, edges=tuple((i, i + 1, 1.0) for i in range(n - 1)))


def gen_clique(n: int) -> Graph:
    """Unit-weight complete graph K_n."""
    if n < 1:
        raise ValidationError(f"a clique needs n >= 1, got {n}")
    return Graph(n=n, edges=tuple((u, v, 1.0) for u, v in itertools.combinations(range(n), 2)))


def gen_two_cliques(l: int, r: int) -> tuple[Graph, list[frozenset[int]]]:
    """
    H(l, r): disjoint unit cliques on {0..l-1} and {l..l+r-1}.

    Returns:
        Tuple (graph, [L, R])
    """
    if l < 0 or r < 0 or l + r < 1:
        raise ValidationError(f"two-clique graph needs l, r >= 0 and l + r >= 1, got {l}, {r}")
    edges = [(u, v, 1.0) for u, v in itertools.combinations(range(l), 2)]
    edges += [(u, v, 1.0) for u, v in itertools.combinations(range(l, l + r), 2)]
    return Graph(n=l + r, edges=tuple(edges)), [frozenset(range(l)), frozenset(range(l, l + r))]


def sample_planted(model: PlantedModel, seed: SeedLike = None) -> Graph:
    """One unit-weight graph with independent edges at the model's pair probabilities."""
    rng = _rng(seed)
    n = model.n
    rows, cols = np.triu_indices(n, k=1)
    if model.kind == "simple":
        assignment = np.asarray(model.assignment)
        probs = np.where(assignment[rows] == assignment[cols], model.p, model.q)
    else:
        probs = model.prob_matrix[rows, cols]  # type: ignore[index]
    keep = rng.random(len(rows)) < probs
    edges = tuple((int(u), int(v), 1.0) for u, v in zip(rows[keep], cols[keep]))
    return Graph(n=n, edges=edges)


def gen_planted(
    n: int, p: float, q: float, seed: SeedLike = None
) -> tuple[Graph, frozenset[int], frozenset[int]]:
    """
    (n, p, q) planted partition with L = {0..n/2-1} and R = {n/2..n-1}.

    Raises:
        ValidationError: If n is odd or not 0 <= q < p <= 1
    """
    model = PlantedModel.simple(n, p, q)
    graph = sample_planted(model, seed)
    left, right = model.clusters
    logger.debug("planted graph n=%d p=%s q=%s: %d edges", n, p, q, len(graph.edges))
    return graph, left, right


def gen_general_planted(
    sizes: Sequence[int],
    in_prob: float | Callable[[int, int], float],
    q: float,
    seed: SeedLike = None,
) -> tuple[Graph, list[frozenset[int]]]:
    """
    Planted partition with contiguous clusters of the given sizes.

    Args:
        sizes: Cluster sizes, clusters take consecutive node ids
        in_prob: In-cluster edge probability, constant or a function of the pair
        q: Cross-cluster edge probability

    Raises:
        ValidationError: If a size is not positive or some in-cluster
            probability is not in (q, 1]
    """
    if not sizes or any(s < 1 for s in sizes):
        raise ValidationError(f"cluster sizes must be positive, got {list(sizes)}")
    assignment = [cid for cid, size in enumerate(sizes) for _ in range(size)]
    model = PlantedModel.general(assignment, in_prob, q)
    return sample_planted(model, seed), model.clusters


def gen_random_graph(
    n: int, p: float, seed: SeedLike = None, connected: bool = False, max_tries: int = 1000
) -> Graph:
    """
    Erdos-Renyi G(n, p) with unit weights; with connected=True, resample until connected.

    Raises:
        ValidationError: On bad parameters or when no connected sample was drawn
    """
    if n < 1:
        raise ValidationError(f"a random graph needs n >= 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"edge probability must lie in [0, 1], got {p}")
    rng = _rng(seed)
    rows, cols = np.triu_indices(n, k=1)
    for _ in range(max_tries):
        keep = rng.random(len(rows)) < p
        graph = Graph(n=n, edges=tuple((int(u), int(v), 1.0) for u, v in zip(rows[keep], cols[keep])))
        if not connected or is_connected(graph):
            return graph
    raise ValidationError(f"no connected G({n}, {p}) sample in {max_tries} tries")


def clusters_sidecar(
    generator: str,
    params: dict[str, Any],
    clusters: Sequence[frozenset[int]] = (),
    seed: int | None = None,
) -> dict[str, Any]:
    """Ground-truth JSON written next to a generated graph."""
    data: dict[str, Any] = {"generator": generator, "params": params, "seed": seed}
    data["clusters"] = [sorted(c) for c in clusters]
    if generator in ("planted", "two-cliques") and len(clusters) == 2:
        data["L"], data["R"] = data["clusters"]
    return data
