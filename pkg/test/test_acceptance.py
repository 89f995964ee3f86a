"""
End-to-end checks of the cost identities, oracles and guarantees on seeded corpora
"""

import itertools

import numpy as np
import pytest

from src.clusterers import (
    approximation_experiment,
    max_tree_bruteforce,
    optimal_line_tree,
    optimal_tree_bruteforce,
    planted_experiment,
)
from src.config.settings import ExperimentSettings
from src.cost import (
    PlantedModel,
    ScalingFunction,
    cost,
    edge_sum,
    excess_lower_bound,
    expected_planted_cost,
    generalized_cost,
    restricted_cost,
    two_clique_optimum,
)
from src.generators import gen_clique, gen_line, gen_random_graph, gen_two_cliques
from src.graph import Graph, complement, induced_subgraph, is_connected
from src.hardness import (
    CnfInstance,
    assignment_to_tree,
    enumerate_naestar,
    naesat_brute,
    reduce_to_graph,
)
from src.tree import ClusterTree, Split, enumerate_trees, line_chain_tree, replace_subtree, splits


def _random_tree(leaves, rng: np.random.Generator) -> ClusterTree:
    """Uniformly random merge order over the given leaves."""
    parts: list = [int(v) for v in leaves]
    while len(parts) > 1:
        i, j = sorted(int(x) for x in rng.choice(len(parts), size=2, replace=False))
        merged = [parts[i], parts[j]]
        del parts[j]
        parts[i] = merged
    return ClusterTree.from_nested(parts[0])


def _integer_graph(n: int, rng: np.random.Generator, density: float = 0.5) -> Graph:
    edges = [
        (u, v, int(rng.integers(1, 10)))
        for u, v in itertools.combinations(range(n), 2)
        if rng.random() < density
    ]
    return Graph.from_edges(n, edges)


def _clique_cost(n: int) -> int:
    return (n**3 - n) // 3


def test_every_binary_tree_costs_the_same_on_a_clique():
    for n in range(2, 7):
        g = gen_clique(n)
        assert {cost(g, t).total for t in enumerate_trees(n)} == {_clique_cost(n)}


def test_edge_sum_equals_split_sum():
    rng = np.random.default_rng(101)
    for _ in range(500):
        n = int(rng.integers(1, 11))
        g = _integer_graph(n, rng)
        t = _random_tree(range(n), rng)
        report = cost(g, t)
        assert report.total == edge_sum(g, t)
        assert report.form_difference == 0


@pytest.mark.slow
def test_cost_plus_complement_cost_is_constant():
    rng = np.random.default_rng(202)
    for _ in range(100):
        n = int(rng.integers(2, 7))
        g = gen_random_graph(n, float(rng.uniform(0.2, 0.8)), rng)
        gc = complement(g)
        for t in enumerate_trees(n):
            assert cost(g, t).total + cost(gc, t).total == _clique_cost(n)


def test_subtree_replacement_identity():
    rng = np.random.default_rng(303)
    for _ in range(200):
        n = int(rng.integers(2, 10))
        g = _integer_graph(n, rng)
        t = _random_tree(range(n), rng)
        internal = t.internal_nodes()
        u = internal[int(rng.integers(len(internal)))]
        old = t.subtree(u)
        new = _random_tree(sorted(old.leaves), rng)
        swapped = replace_subtree(t, u, new)
        delta = cost(g, swapped).total - cost(g, t).total
        assert delta == restricted_cost(g, new) - restricted_cost(g, old)


def test_optimal_trees_never_cut_between_components():
    rng = np.random.default_rng(404)
    checked = 0
    while checked < 100:
        n = int(rng.integers(3, 8))
        g = gen_random_graph(n, 0.3, rng)
        if is_connected(g):
            continue
        checked += 1
        tree, _ = optimal_tree_bruteforce(g)
        for split in splits(tree):
            sub, _ = induced_subgraph(g, split.parent)
            if not is_connected(sub):
                assert g.multiway_cut_weight(split.parts) == 0


def test_line_graph_optimum():
    for n in range(1, 9):
        tree, value = optimal_line_tree(n)
        _, brute = optimal_tree_bruteforce(gen_line(n))
        assert value == brute
        assert cost(gen_line(n), tree).total == value
        assert cost(gen_line(n), line_chain_tree(n)).total == n * (n + 1) // 2 - 1
    assert [optimal_line_tree(n)[1] for n in (2, 4, 8)] == [2, 8, 24]


def _best_with_top_split(g: Graph, side_a: frozenset[int], side_b: frozenset[int]) -> float:
    total = g.n * g.cut_weight(side_a, side_b)
    for side in (side_a, side_b):
        total += optimal_tree_bruteforce(induced_subgraph(g, side)[0])[1]
    return total


def test_two_clique_excess_bound():
    for l in range(1, 6):
        for r in range(1, 7 - l):
            g, (left, right) = gen_two_cliques(l, r)
            n = l + r
            base = two_clique_optimum(l, r)
            for k in range(1, n):
                for rest in itertools.combinations(range(1, n), k - 1):
                    side_a = frozenset((0, *rest))
                    side_b = frozenset(range(n)) - side_a
                    bound = base + excess_lower_bound(Split.of([side_a, side_b]), l, r)
                    value = _best_with_top_split(g, side_a, side_b)
                    assert value >= bound
                    pure = any(side <= left or side <= right for side in (side_a, side_b))
                    if pure:
                        assert value == bound


@pytest.mark.slow
def test_greedy_guarantees_on_random_corpus():
    settings = ExperimentSettings(
        kind="approximation", trials=200, min_n=3, max_n=8, scaling=["log", "power:2"], seed=17
    )
    df = approximation_experiment(settings)
    assert len(df) == 600
    assert df["within_bound"].all()
    for method, group in df.groupby("method"):
        print(f"{method}: max ratio {group['ratio'].max():.4f}")
    assert df.loc[df["method"] == "greedy", "ratio"].max() < 27 / 4


def test_generalized_clique_identities():
    g = gen_clique(4)
    balanced = ClusterTree.from_nested([[0, 1], [2, 3]])
    chain = ClusterTree.from_nested([[[0, 1], 2], 3])
    for f in (ScalingFunction.log(), ScalingFunction.power(2)):
        assert generalized_cost(g, balanced, f).total == pytest.approx(4 * f(4) + 2 * f(2), rel=1e-12)
        assert generalized_cost(g, chain, f).total == pytest.approx(
            3 * f(4) + 2 * f(3) + f(2), rel=1e-12
        )
    square = ScalingFunction.power(2)
    assert generalized_cost(g, balanced, square).total == 72
    assert generalized_cost(g, chain, square).total == 70


def test_reduction_threshold_matches_satisfiability():
    cycle = CnfInstance.of(3, [(1, 2, 3), (-1, 2), (-2, 3), (-3, 1)])
    family = [cycle, *(phi for n in range(1, 5) for phi in enumerate_naestar(n))]
    assert len(family) > 1
    for phi in family:
        reduction = reduce_to_graph(phi)
        _, best = max_tree_bruteforce(reduction.graph, weighted=True)
        assignment = naesat_brute(phi)
        assert (best >= reduction.M) == (assignment is not None)
        if assignment is not None:
            witness = assignment_to_tree(phi, assignment)
            assert cost(reduction.graph, witness).total == reduction.M


def test_reduction_witness_on_satisfiable_formula():
    phi = CnfInstance.of(
        6,
        [(1, 2, 3), (4, 5, 6), (1, -4), (-2, 5), (-3, 6), (-1, -5), (2, -6), (3, 4)],
    )
    reduction = reduce_to_graph(phi)
    assignment = naesat_brute(phi)
    assert assignment is not None
    assert cost(reduction.graph, assignment_to_tree(phi, assignment)).total == reduction.M == 2064


@pytest.mark.slow
def test_planted_heuristic_recovers_partition():
    model = PlantedModel.simple(40, 0.8, 0.2)
    df = planted_experiment(model, trials=50, epsilons=[0.2], seed=7, methods=["greedy-heuristic"])
    rate = df["eps_good"].mean()
    print(f"eps-good rate at eps=0.2: {rate:.2f}")
    assert rate >= 0.9


def test_planted_optimum_is_zero_good():
    model = PlantedModel.simple(6, 1.0, 0.0)
    df = planted_experiment(model, trials=20, epsilons=[0.0], seed=3, methods=["optimal"])
    assert df["eps_good"].all()


def test_expected_planted_cost_formula():
    rng = np.random.default_rng(606)
    for n in (2, 4, 6):
        for p, q in ((0.7, 0.2), (1.0, 0.0), (0.5, 0.45)):
            model = PlantedModel.simple(n, p, q)
            h, _ = gen_two_cliques(n // 2, n // 2)
            for _ in range(20):
                t = _random_tree(range(n), rng)
                direct = sum(
                    model.edge_probability(i, j) * t.size(t.lca(i, j))
                    for i, j in itertools.combinations(range(n), 2)
                )
                formula = q * (n**3 - n) / 3 + (p - q) * cost(h, t).total
                assert expected_planted_cost(model, t) == pytest.approx(direct, rel=1e-9)
                assert expected_planted_cost(model, t) == pytest.approx(formula, rel=1e-9)
