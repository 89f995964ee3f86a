"""
Tests for graph representation, edge-list I/O, complement and components
"""

import itertools

import numpy as np
import pytest

from src.generators import gen_clique, gen_line, gen_random_graph
from src.graph import (
    Graph,
    complement,
    components,
    dump_graph,
    induced_subgraph,
    is_connected,
    load_graph,
    read_graph,
    write_graph,
)
from src.utils.errors import GraphParseError, ValidationError


def test_load_graph_defaults_weight_to_one():
    g = load_graph("3\n0 1\n1 2")
    assert g.n == 3
    assert g.edges == ((0, 1, 1.0), (1, 2, 1.0))


def test_load_graph_single_node():
    g = load_graph("1")
    assert g.n == 1
    assert g.edges == ()


def test_load_graph_canonicalizes_orientation():
    g = load_graph("# comment\n3\n2 0 0.5\n\n1 0\n")
    assert g.edges == ((0, 1, 1.0), (0, 2, 0.5))


@pytest.mark.parametrize(
    "text, line",
    [
        ("2\n0 0 1", 2),
        ("2\n0 2", 2),
        ("2\n0 1 0", 2),
        ("2\n0 1 -1", 2),
        ("3\n0 1\n1 2\n1 0", 4),
        ("x", 1),
        ("2\n0 a", 2),
    ],
)
def test_load_graph_errors_name_line(text, line):
    with pytest.raises(GraphParseError) as info:
        load_graph(text)
    assert info.value.line_number == line
    assert f"line {line}" in str(info.value)


def test_load_graph_empty_document():
    with pytest.raises(GraphParseError):
        load_graph("\n# nothing\n")


def test_dump_graph_format(tmp_path):
    g = Graph.from_edges(3, [(1, 0, 0.3), (1, 2)])
    assert dump_graph(g) == "3\n0 1 0.3\n1 2 1\n"

    path = tmp_path / "nested" / "g.txt"
    write_graph(g, path)
    assert read_graph(path) == g


def test_graph_rejects_bad_edges():
    with pytest.raises(ValidationError):
        Graph(n=2, edges=((1, 0, 1.0),))
    with pytest.raises(ValidationError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(ValidationError):
        Graph.from_edges(2, [(0, 1, 0.0)])
    with pytest.raises(ValidationError):
        Graph.from_edges(2, [(1, 1)])


def test_weight_lookup_and_matrix():
    g = Graph.from_edges(3, [(0, 2, 2.5)])
    assert g.weight(2, 0) == 2.5
    assert g.weight(0, 1) == 0.0
    matrix = g.weight_matrix()
    assert np.array_equal(matrix, matrix.T)
    assert matrix[0, 2] == 2.5
    assert g.neighbors(2) == ((0, 2.5),)
    assert g.total_weight == 2.5
    assert not g.is_unit_weight


def test_complement_of_path():
    g = complement(gen_line(3), 1)
    assert g.edges == ((0, 2, 1.0),)


def test_complement_of_clique_is_empty():
    g = complement(gen_clique(3), 1)
    assert g.n == 3
    assert g.edges == ()


def test_complement_fractional_weight():
    g = complement(Graph.from_edges(2, [(0, 1, 0.3)]), 1)
    assert g.weight(0, 1) == pytest.approx(0.7)


def test_complement_rejects_small_constant():
    with pytest.raises(ValidationError):
        complement(Graph.from_edges(2, [(0, 1, 2.0)]), 1)


def test_complement_is_an_involution():
    for seed in range(10):
        g = gen_random_graph(6, 0.5, seed)
        assert complement(complement(g, 1), 1) == g


def test_cut_plus_complement_cut_is_size_product():
    g = gen_random_graph(6, 0.4, 3)
    gc = complement(g, 1)
    nodes = range(g.n)
    for k in range(1, g.n):
        for side in itertools.combinations(nodes, k):
            rest = [v for v in nodes if v not in side]
            assert g.cut_weight(side, rest) + gc.cut_weight(side, rest) == k * (g.n - k)


def test_induced_subgraph_of_path():
    sub, mapping = induced_subgraph(gen_line(3), {0, 2})
    assert sub.n == 2
    assert sub.edges == ()
    assert mapping == {0: 0, 2: 1}


def test_induced_subgraph_of_clique():
    sub, _ = induced_subgraph(gen_clique(4), [3, 1, 2])
    assert sub == gen_clique(3)


def test_induced_subgraph_identity():
    g = gen_random_graph(5, 0.5, 1)
    sub, mapping = induced_subgraph(g, range(5))
    assert sub == g
    assert mapping == {i: i for i in range(5)}


def test_induced_subgraph_rejects_empty():
    with pytest.raises(ValidationError):
        induced_subgraph(gen_line(3), [])


def test_components():
    assert components(gen_line(3)) == [frozenset({0, 1, 2})]
    g = Graph.from_edges(4, [(0, 1)])
    assert components(g) == [frozenset({0, 1}), frozenset({2}), frozenset({3})]
    assert components(Graph(n=3)) == [frozenset({0}), frozenset({1}), frozenset({2})]
    assert not is_connected(g)
    assert is_connected(Graph(n=1))


def test_multiway_cut_weight():
    g = gen_clique(4)
    assert g.multiway_cut_weight([{0}, {1}, {2, 3}]) == 5.0
    assert g.cut_weight({0, 1}, {2, 3}) == 4.0


def test_to_networkx():
    nxg = Graph.from_edges(3, [(0, 1, 2.0)]).to_networkx()
    assert nxg.number_of_nodes() == 3
    assert nxg[0][1]["weight"] == 2.0
