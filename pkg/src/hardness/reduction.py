"""
Graph reduction from NAESAT* to maximum-cost hierarchical clustering.

Literal x_i maps to node 2(i-1) and -x_i to node 2(i-1)+1. Every 3-clause adds a
unit triangle on its literals and one on their negations, every 2-clause adds the
unit edge between its literals and the one between their negations, and each
variable adds the heavy edge {x_i, -x_i} of weight W = 2nm + 1. The formula is
NAE-satisfiable iff some binary tree costs at least M = 10nm + 4nm' + 2n^2 W.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from src.config.constants import NAESAT_BRUTE_BLOCK, NAESAT_BRUTE_CAP, NAESTAR_ENUMERATION_CAP
from src.graph import Graph
from src.hardness.cnf import Clause, CnfInstance, nae_satisfies, validate_naestar
from src.hardness.rewrite import remove_redundancies
from src.tree import ClusterTree, balanced_tree
from src.utils.errors import CapacityError, ValidationError

logger = logging.getLogger(__name__)


def literal_node(lit: int) -> int:
    return 2 * (abs(lit) - 1) + (0 if lit > 0 else 1)


@dataclass(frozen=True)
class Reduction:
    """
    Output of reduce_to_graph.

    Attributes:
        graph: Reduction graph on 2n literal nodes
        M: Cost threshold
        W: Weight of the {x_i, -x_i} edges
        literal_map: literal -> node id
        m: Number of 3-clauses
        m_prime: Number of 2-clauses
    """

    graph: Graph
    M: int
    W: int
    literal_map: dict[int, int] = field(default_factory=dict)
    m: int = 0
    m_prime: int = 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "M": self.M,
            "W": self.W,
            "m": self.m,
            "m_prime": self.m_prime,
            "num_vars": self.graph.n // 2,
            "literal_map": {str(lit): node for lit, node in sorted(self.literal_map.items())},
        }


def _require_reducible(phi: CnfInstance) -> None:
    report = validate_naestar(phi)
    if not report.valid:
        raise ValidationError(f"not a valid NAESAT* instance: {report.summary()}")
    if remove_redundancies(phi) != phi:
        raise ValidationError("formula has redundant clauses; run remove_redundancies first")


def reduce_to_graph(phi: CnfInstance) -> Reduction:
    """
    Build the reduction graph and threshold for a valid, redundancy-free NAESAT* formula.

    Raises:
        ValidationError: If phi is not valid NAESAT*, still has redundant clauses,
            or two gadgets produce the same edge
    """
    _require_reducible(phi)
    n, m, m_prime = phi.num_vars, phi.m, phi.m_prime
    W = 2 * n * m + 1
    M = 10 * n * m + 4 * n * m_prime + 2 * n * n * W

    weights: dict[tuple[int, int], int] = {}

    def add(a: int, b: int, w: int) -> None:
        u, v = sorted((literal_node(a), literal_node(b)))
        if (u, v) in weights:
            raise ValidationError(f"literals {a} and {b} produce a duplicate edge ({u}, {v})")
        weights[(u, v)] = w

    for clause in phi.clauses:
        for a, b in itertools.combinations(clause, 2):
            add(a, b, 1)
            add(-a, -b, 1)
    for var in range(1, n + 1):
        add(var, -var, W)

    graph = Graph.from_edges(2 * n, [(u, v, w) for (u, v), w in weights.items()])
    literal_map = {lit: literal_node(lit) for var in range(1, n + 1) for lit in (var, -var)}
    logger.debug(
        "reduction: n=%d m=%d m'=%d, %d edges, W=%d, M=%d", n, m, m_prime, len(graph.edges), W, M
    )
    return Reduction(graph=graph, M=M, W=W, literal_map=literal_map, m=m, m_prime=m_prime)


def _side_tree(graph: Graph, side: frozenset[int]) -> Any:
    inner = [(u, v) for u, v, _ in graph.edges if u in side and v in side]
    if not inner:
        return balanced_tree(side).to_json()
    lower = {u for u, _ in inner}
    if len({x for edge in inner for x in edge}) != 2 * len(inner):
        raise ValidationError("edges left inside a side are not node-disjoint")
    return [balanced_tree(lower).to_json(), balanced_tree(side - lower).to_json()]


def assignment_to_tree(phi: CnfInstance, assignment: Sequence[bool]) -> ClusterTree:
    """
    Two-level witness tree for a NAE-satisfying assignment.

    The root separates true literals from false ones. Each side then splits the lower
    endpoints of its remaining triangle edges from everything else, which cuts all of
    them; below that no edges are left and the subtrees are balanced.

    Raises:
        ValidationError: If the assignment is not NAE-satisfying, phi is not
            reducible, or phi has no variables
    """
    if phi.num_vars == 0:
        raise ValidationError("no tree exists on an empty reduction graph")
    if not nae_satisfies(phi, assignment):
        raise ValidationError("assignment is not NAE-satisfying")
    graph = reduce_to_graph(phi).graph
    true_side = frozenset(
        literal_node(var if assignment[var - 1] else -var) for var in range(1, phi.num_vars + 1)
    )
    false_side = frozenset(graph.nodes) - true_side
    return ClusterTree.from_nested([_side_tree(graph, true_side), _side_tree(graph, false_side)])


def _literal_columns(phi: CnfInstance) -> list[tuple[np.ndarray, np.ndarray]]:
    return [
        (np.array([abs(lit) - 1 for lit in clause]), np.array([lit < 0 for lit in clause]))
        for clause in phi.clauses
    ]


def _scan_assignments(
    start: int, stop: int, n: int, clauses: list[tuple[np.ndarray, np.ndarray]]
) -> int | None:
    ks = np.arange(start, stop, dtype=np.int64)
    # variable 1 is the most significant bit, so index order is lexicographic
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    values = ((ks[:, None] >> shifts[None, :]) & 1).astype(bool)
    ok = np.ones(len(ks), dtype=bool)
    for cols, negated in clauses:
        lits = values[:, cols] ^ negated[None, :]
        ok &= lits.any(axis=1) & ~lits.all(axis=1)
    hits = np.flatnonzero(ok)
    return int(ks[hits[0]]) if len(hits) else None


def naesat_brute(phi: CnfInstance, jobs: int = 1) -> list[bool] | None:
    """
    First NAE-satisfying assignment in lexicographic order (False < True, x1 first),
    or None. Blocks of assignments may be scanned in parallel; the earliest hit wins
    regardless of completion order.

    Raises:
        CapacityError: If phi has more than NAESAT_BRUTE_CAP variables
    """
    n = phi.num_vars
    if n > NAESAT_BRUTE_CAP:
        raise CapacityError("NAE-SAT brute force", n, NAESAT_BRUTE_CAP)
    if n == 0:
        return [] if not phi.clauses else None

    total = 1 << n
    clauses = _literal_columns(phi)
    ranges = [(lo, min(lo + NAESAT_BRUTE_BLOCK, total)) for lo in range(0, total, NAESAT_BRUTE_BLOCK)]
    if jobs > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(lambda r: _scan_assignments(r[0], r[1], n, clauses), ranges))
        hits = [r for r in results if r is not None]
        first = min(hits) if hits else None
    else:
        first = None
        for lo, hi in ranges:
            first = _scan_assignments(lo, hi, n, clauses)
            if first is not None:
                break

    if first is None:
        return None
    return [bool(first >> (n - i) & 1) for i in range(1, n + 1)]


def _triples(variables: tuple[int, ...]) -> Iterator[list[tuple[int, ...]]]:
    if not variables:
        yield []
        return
    head, rest = variables[0], variables[1:]
    for pair in itertools.combinations(rest, 2):
        remaining = tuple(v for v in rest if v not in pair)
        for tail in _triples(remaining):
            yield [(head, *pair), *tail]


def _matchings(literals: tuple[int, ...]) -> Iterator[list[Clause]]:
    if not literals:
        yield []
        return
    head, rest = literals[0], literals[1:]
    for idx, other in enumerate(rest):
        if other == -head:
            continue
        for tail in _matchings(rest[:idx] + rest[idx + 1 :]):
            yield [(head, other), *tail]


def enumerate_naestar(n: int) -> Iterator[CnfInstance]:
    """
    Every valid, redundancy-free NAESAT* formula on n variables, each once in a
    canonical clause order: 3-clauses grouped by smallest variable, then 2-clauses
    pairing up the literals x_1, -x_1, ..., x_n, -x_n. Yields nothing unless 3 | n.

    Raises:
        CapacityError: If n exceeds NAESTAR_ENUMERATION_CAP
    """
    if n < 0:
        raise ValidationError(f"variable count must be nonnegative, got {n}")
    if n > NAESTAR_ENUMERATION_CAP:
        raise CapacityError("NAESAT* enumeration", n, NAESTAR_ENUMERATION_CAP)
    if n % 3:
        return

    variables = tuple(range(1, n + 1))
    literals = tuple(lit for var in variables for lit in (var, -var))
    for groups in _triples(variables):
        for signs in itertools.product((1, -1), repeat=n):
            threes = [tuple(signs[v - 1] * v for v in group) for group in groups]
            for twos in _matchings(literals):
                phi = CnfInstance.of(n, [*threes, *twos])
                if validate_naestar(phi).valid and remove_redundancies(phi) == phi:
                    yield phi
