"""
Tests for plain and generalized cost evaluation and the planted-model quantities
"""

import itertools
import math

import numpy as np
import pytest

from src.cost import (
    PlantedModel,
    ScalingFunction,
    cost,
    edge_sum,
    epsilon_good,
    excess_lower_bound,
    expected_planted_cost,
    generalized_cost,
    laminar_tree,
    parse_scaling,
    planted_gap_bound,
    restricted_cost,
    recovery_epsilon,
    two_clique_optimum,
    ultrametric_cost,
)
from src.generators import gen_clique, gen_line, gen_two_cliques
from src.graph import Graph
from src.tree import ClusterTree, Split, enumerate_trees, line_chain_tree, replace_subtree
from src.utils.errors import ValidationError

BALANCED_4 = ClusterTree.from_nested([[0, 1], [2, 3]])
CHAIN_4 = line_chain_tree(4)


def _integer_graph(n: int, rng: np.random.Generator) -> Graph:
    edges = [
        (u, v, int(rng.integers(1, 6)))
        for u, v in itertools.combinations(range(n), 2)
        if rng.random() < 0.6
    ]
    return Graph.from_edges(n, edges)


def test_path_costs():
    g = gen_line(3)
    assert cost(g, ClusterTree.from_nested([[0, 1], 2])).total == 5
    assert cost(g, ClusterTree.from_nested([0, [1, 2]])).total == 5
    assert cost(g, ClusterTree.from_nested([[0, 2], 1])).total == 6


def test_clique_cost():
    assert cost(gen_clique(4), BALANCED_4).total == 20
    assert cost(gen_clique(4), CHAIN_4).total == 20
    # every edge of the star pays 4
    assert cost(gen_clique(4), ClusterTree.star(range(4))).total == 24


def test_report_breakdown():
    report = cost(gen_clique(4), BALANCED_4)
    assert report.form_difference == 0
    assert report.edge_total == report.total
    assert [s.cost for s in report.per_split] == [16, 2, 2]
    data = report.to_dict()
    assert data["total"] == 20
    assert data["scaling"] == "linear"
    assert data["splits"][0] == {"set": [0, 1, 2, 3], "parts": [[0, 1], [2, 3]], "cost": 16}


def test_no_edges_cost_zero():
    assert cost(Graph(n=3), ClusterTree.from_nested([[0, 1], 2])).total == 0


def test_leaf_mismatch():
    with pytest.raises(ValidationError):
        cost(gen_line(3), ClusterTree.from_nested([0, 1]))
    with pytest.raises(ValidationError):
        cost(gen_line(3), ClusterTree.from_nested([[0, 1], 3]))


def test_split_sum_equals_edge_sum():
    rng = np.random.default_rng(11)
    for _ in range(40):
        n = int(rng.integers(2, 7))
        g = _integer_graph(n, rng)
        trees = list(enumerate_trees(n))
        t = trees[int(rng.integers(len(trees)))]
        report = cost(g, t)
        assert report.total == edge_sum(g, t)
        assert report.form_difference == 0


def test_ultrametric_cost_offset():
    rng = np.random.default_rng(5)
    g = _integer_graph(5, rng)
    for t in list(enumerate_trees(5))[:20]:
        assert ultrametric_cost(g, t) == cost(g, t).total - g.total_weight


def test_restricted_cost():
    g = gen_line(4)
    assert restricted_cost(g, ClusterTree.from_nested([1, 2])) == 2
    assert restricted_cost(g, ClusterTree.from_nested([0, 2])) == 0


def test_subtree_replacement_changes_cost_locally():
    rng = np.random.default_rng(21)
    for _ in range(30):
        n = int(rng.integers(3, 7))
        g = _integer_graph(n, rng)
        trees = list(enumerate_trees(n))
        t = trees[int(rng.integers(len(trees)))]
        internal = t.internal_nodes()
        u = internal[int(rng.integers(len(internal)))]
        leaves = sorted(t.leaves_of(u))
        options = list(enumerate_trees(len(leaves)))
        new_sub = options[int(rng.integers(len(options)))].relabel(dict(enumerate(leaves)))

        replaced = replace_subtree(t, u, new_sub)
        delta = restricted_cost(g, new_sub) - restricted_cost(g, t.subtree(u))
        assert cost(g, replaced).total - cost(g, t).total == delta


def test_generalized_linear_matches_cost():
    g = gen_line(5)
    t = ClusterTree.from_nested([[0, 1], [2, [3, 4]]])
    assert generalized_cost(g, t, ScalingFunction.linear()).total == cost(g, t).total


def test_generalized_clique_of_four():
    g = gen_clique(4)
    for f in (ScalingFunction.log(), ScalingFunction.power(2)):
        balanced = generalized_cost(g, BALANCED_4, f)
        chain = generalized_cost(g, CHAIN_4, f)
        assert balanced.total == pytest.approx(4 * f(4) + 2 * f(2), rel=1e-12)
        assert chain.total == pytest.approx(3 * f(4) + 2 * f(3) + f(2), rel=1e-12)
        assert balanced.form_difference == pytest.approx(0, abs=1e-9)

    # concave favours the balanced tree, convex the chain
    log, square = ScalingFunction.log(), ScalingFunction.power(2)
    assert generalized_cost(g, BALANCED_4, log).total < generalized_cost(g, CHAIN_4, log).total
    assert generalized_cost(g, BALANCED_4, square).total == 72
    assert generalized_cost(g, CHAIN_4, square).total == 70


def test_scaling_parsing():
    assert parse_scaling("linear").is_linear
    assert parse_scaling("x").is_linear
    assert parse_scaling(None).is_linear
    assert parse_scaling("ln").kind == "log"
    assert parse_scaling("power:2").spec == "power:2"
    assert parse_scaling("power:1").is_linear
    table = parse_scaling("table:0,1,3,7")
    assert table(3) == 7
    assert table.domain_max == 3
    for bad in ("cubic", "power:x", "power:0", "table:1,2", "table:0,2,2"):
        with pytest.raises(ValidationError):
            parse_scaling(bad)


def test_scaling_vectorized_matches_scalar():
    xs = np.arange(0, 7)
    for f in (ScalingFunction.linear(), ScalingFunction.log(), ScalingFunction.power(1.5)):
        assert np.allclose(f.values(xs), [f(int(x)) for x in xs])
    table = ScalingFunction.from_table([0, 1, 2])
    with pytest.raises(ValidationError):
        table.check_domain(3)
    with pytest.raises(ValidationError):
        generalized_cost(gen_line(3), ClusterTree.from_nested([[0, 1], 2]), table)


def test_planted_model_validation():
    m = PlantedModel.simple(4, 0.8, 0.2)
    assert m.clusters == [frozenset({0, 1}), frozenset({2, 3})]
    assert m.edge_probability(0, 1) == 0.8
    assert m.edge_probability(1, 2) == 0.2
    for n, p, q in ((5, 0.8, 0.2), (4, 0.2, 0.2), (4, 1.2, 0.2), (0, 0.8, 0.2)):
        with pytest.raises(ValidationError):
            PlantedModel.simple(n, p, q)
    with pytest.raises(ValidationError):
        PlantedModel.general([0, 0, 1], 0.1, 0.2)


def test_excess_graph():
    h = PlantedModel.simple(4, 0.8, 0.2).excess_graph()
    assert [(u, v) for u, v, _ in h.edges] == [(0, 1), (2, 3)]
    assert all(w == pytest.approx(0.6) for _, _, w in h.edges)


@pytest.mark.parametrize(
    "model",
    [
        PlantedModel.simple(4, 0.7, 0.1),
        PlantedModel.simple(6, 1.0, 0.0),
        PlantedModel.general([0, 0, 1, 1, 1], lambda i, j: 0.5 + 0.1 * (i + j) / 10, 0.2),
    ],
)
def test_expected_cost_formula(model):
    for t in list(enumerate_trees(model.n))[:15]:
        direct = sum(
            model.edge_probability(i, j) * t.size(t.lca(i, j))
            for i, j in itertools.combinations(range(model.n), 2)
        )
        assert expected_planted_cost(model, t) == pytest.approx(direct, rel=1e-9)


def test_two_clique_optimum():
    assert two_clique_optimum(2, 2) == 4
    assert two_clique_optimum(3, 0) == 8
    g, clusters = gen_two_cliques(3, 2)
    assert cost(g, laminar_tree(clusters)).total == two_clique_optimum(3, 2)


def test_excess_lower_bound():
    assert excess_lower_bound(Split.of([{0, 2}, {1, 3}]), 2, 2) == 4
    assert excess_lower_bound(Split.of([{0, 1}, {2, 3}]), 2, 2) == 0
    with pytest.raises(ValidationError):
        excess_lower_bound(Split.of([{0}, {1}, {2, 3}]), 2, 2)
    with pytest.raises(ValidationError):
        excess_lower_bound(Split.of([{0}, {1}]), 2, 2)


def test_epsilon_good():
    left, right = {0, 1}, {2, 3}
    good, witness = epsilon_good(BALANCED_4, left, right, 0.0)
    assert good
    assert witness == Split.of([{0, 1}, {2, 3}])

    mixed = ClusterTree.from_nested([[0, 2], [1, 3]])
    assert epsilon_good(mixed, left, right, 0.0) == (False, None)
    assert epsilon_good(mixed, left, right, 1.0)[0]


def test_epsilon_good_kary_split():
    # a part against the union of the others
    assert epsilon_good(ClusterTree.from_nested([[0, 1], 2, 3]), {0, 1}, {2, 3}, 0.0)[0]
    assert not epsilon_good(ClusterTree.from_nested([[0, 2], 1, 3]), {0, 1}, {2, 3}, 0.0)[0]
    assert epsilon_good(ClusterTree.from_nested([[0, 1], [2, 3], [4, 5]]), {0, 1, 2}, {3, 4, 5}, 1 / 3)[0]


def test_epsilon_good_validation():
    with pytest.raises(ValidationError):
        epsilon_good(BALANCED_4, {0}, {1, 2, 3}, 0.1)
    with pytest.raises(ValidationError):
        epsilon_good(BALANCED_4, {0, 1}, {2, 3}, 1.5)
    with pytest.raises(ValidationError):
        epsilon_good(BALANCED_4, {0, 1}, {2, 4}, 0.1)


def test_planted_bounds():
    assert planted_gap_bound(8, 1.0, 0.0, 0.5) == 16
    eps = recovery_epsilon(40, 0.8, 0.2, 0.05)
    assert eps > 1 / 6
    assert recovery_epsilon(4000, 0.8, 0.2, 0.05) < eps
    assert math.isfinite(eps)
    with pytest.raises(ValidationError):
        recovery_epsilon(40, 0.2, 0.8, 0.05)
    with pytest.raises(ValidationError):
        recovery_epsilon(40, 0.8, 0.2, 0.0)
