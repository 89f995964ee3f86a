"""
Tests for NAESAT* formulas, rewrites and the max-cost reduction
"""

import itertools

import pytest

from src.clusterers import max_tree_bruteforce
from src.cost import cost
from src.hardness import (
    CnfInstance,
    assignment_to_tree,
    dump_dimacs,
    enumerate_naestar,
    from_naesat,
    literal_node,
    nae_satisfies,
    naesat_brute,
    parse_dimacs,
    read_dimacs,
    reduce_to_graph,
    remove_redundancies,
    validate_naestar,
)
from src.utils.errors import CapacityError, CnfParseError, ValidationError

# x1 = x2 = x3 is forced by the 2-clauses, so the 3-clause cannot be NAE
CYCLE = CnfInstance.of(3, [(1, 2, 3), (-1, 2), (-2, 3), (-3, 1)])

# solutions: x4 = x1, every other variable equal to -x1
SATISFIABLE = CnfInstance.of(
    6,
    [(1, 2, 3), (4, 5, 6), (1, -4), (-2, 5), (-3, 6), (-1, -5), (2, -6), (3, 4)],
)

# (a, b, c) and (a, b, -c) together force a != b; three of those pairs clash
FORCED_TRIANGLE = CnfInstance.of(
    4, [(1, 2, 3), (1, 2, -3), (2, 3, 4), (2, 3, -4), (1, 3, 4), (1, 3, -4)]
)


def _nae_sat_exhaustive(phi: CnfInstance) -> bool:
    return any(
        nae_satisfies(phi, list(values))
        for values in itertools.product((False, True), repeat=phi.num_vars)
    )


# =============================================================================
# DIMACS
# =============================================================================


def test_parse_dimacs():
    text = "c cycle\np cnf 3 4\n1 2 3 0\n-1 2 0\n-2 3 0 -3\n1 0\n"
    assert parse_dimacs(text) == CYCLE


def test_parse_stops_at_percent():
    text = "p cnf 2 1\n1 2 0\n%\n0\n"
    assert parse_dimacs(text).clauses == ((1, 2),)


@pytest.mark.parametrize(
    "text, line_number",
    [
        ("1 2 0\np cnf 2 1\n", 1),
        ("p cnf 2 1\n1 3 0\n", 2),
        ("p cnf 2 1\n1 x 0\n", 2),
        ("p cnf 2 1\np cnf 2 1\n", 2),
        ("p dnf 2 1\n", 1),
        ("p cnf 2 1\n\n1 2\n", 3),
        ("p cnf 3 1\n1 0\n", 2),
    ],
)
def test_parse_dimacs_errors(text, line_number):
    with pytest.raises(CnfParseError) as excinfo:
        parse_dimacs(text)
    assert excinfo.value.line_number == line_number


def test_parse_dimacs_whole_document_errors():
    with pytest.raises(CnfParseError):
        parse_dimacs("c nothing here\n")
    with pytest.raises(CnfParseError):
        parse_dimacs("p cnf 2 2\n1 2 0\n")


def test_dump_dimacs(tmp_path):
    text = dump_dimacs(CYCLE, comment="cycle")
    assert text == "c cycle\np cnf 3 4\n1 2 3 0\n-1 2 0\n-2 3 0\n-3 1 0\n"
    path = tmp_path / "cycle.cnf"
    path.write_text(text)
    assert read_dimacs(path) == CYCLE


def test_instance_validation():
    with pytest.raises(ValidationError):
        CnfInstance.of(2, [(1,)])
    with pytest.raises(ValidationError):
        CnfInstance.of(2, [(1, 3)])
    with pytest.raises(ValidationError):
        CnfInstance.of(2, [(1, 0)])
    assert SATISFIABLE.m == 2
    assert SATISFIABLE.m_prime == 6


# =============================================================================
# NAESAT* checks and rewrites
# =============================================================================


def test_validate_naestar():
    assert validate_naestar(CYCLE).valid
    assert validate_naestar(SATISFIABLE)

    report = validate_naestar(CnfInstance.of(3, [(1, 2, 3), (1, 2), (-1, -2)]))
    assert not report
    assert set(report.violations) == {3}
    assert "x3" in report.summary()

    same_polarity = validate_naestar(CnfInstance.of(3, [(1, 2, 3), (1, -2), (1, -3), (-1, 2), (-1, 3)]))
    assert 1 in same_polarity.violations


def test_nae_satisfies():
    assert nae_satisfies(SATISFIABLE, [False, True, True, False, True, True])
    assert not nae_satisfies(CYCLE, [True, True, True])
    with pytest.raises(ValidationError):
        nae_satisfies(CYCLE, [True])


@pytest.mark.parametrize(
    "clauses, expected",
    [
        ([(1, -1, 2), (1, 2)], [(1, 2)]),
        ([(1, 2), (2, 1)], [(1, 2)]),
        ([(1, -2), (-1, 2)], [(1, -2)]),
        ([(1, 2, 3), (1, 2)], [(1, 2)]),
        ([(-1, -2, 3), (1, 2)], [(1, 2)]),
        ([(1, 2, 3), (1, 2, 3), (1, 3)], [(1, 3)]),
    ],
)
def test_redundancy_rules(clauses, expected):
    phi = CnfInstance.of(3, clauses)
    assert list(remove_redundancies(phi).clauses) == expected


def test_redundancy_removal_keeps_clean_formulas():
    assert remove_redundancies(CYCLE) == CYCLE
    assert remove_redundancies(SATISFIABLE) == SATISFIABLE


def test_redundancy_removal_preserves_nae_satisfiability():
    literals = [1, -1, 2, -2, 3, -3]
    pairs = [p for p in itertools.combinations(literals, 2) if p[0] != -p[1]]
    for first, second in itertools.combinations(pairs, 2):
        phi = CnfInstance.of(3, [(1, 2, 3), first, second])
        reduced = remove_redundancies(phi)
        assert _nae_sat_exhaustive(reduced) == _nae_sat_exhaustive(phi)


def test_from_naesat_structure():
    phi3 = CnfInstance.of(3, [(1, 2, 3), (-1, -2, -3)])
    rewritten = from_naesat(phi3)
    assert rewritten.num_vars == 6
    assert rewritten.m == 2
    assert rewritten.three_clauses == [(1, 3, 5), (-2, -4, -6)]
    assert rewritten.two_clauses[:2] == [(-1, 2), (-2, 1)]
    assert validate_naestar(rewritten).valid


def test_from_naesat_drops_single_occurrences():
    rewritten = from_naesat(CnfInstance.of(4, [(1, 2, 3), (1, 2, 4)]))
    assert rewritten.num_vars == 0
    assert rewritten.clauses == ()


def test_from_naesat_needs_three_clauses():
    with pytest.raises(ValidationError):
        from_naesat(CYCLE)


@pytest.mark.parametrize(
    "phi3",
    [
        CnfInstance.of(3, [(1, 2, 3), (-1, -2, -3)]),
        CnfInstance.of(4, [(1, 2, 3), (1, 2, -3), (2, 3, 4), (-2, -3, 4)]),
        CnfInstance.of(4, [(1, 2, 3), (1, -2, 4), (-1, 3, -4)]),
        FORCED_TRIANGLE,
    ],
)
def test_from_naesat_preserves_nae_satisfiability(phi3):
    rewritten = from_naesat(phi3)
    assert validate_naestar(rewritten).valid
    assert (naesat_brute(rewritten) is not None) == _nae_sat_exhaustive(phi3)


def test_forced_triangle_is_unsatisfiable():
    assert not _nae_sat_exhaustive(FORCED_TRIANGLE)
    assert naesat_brute(from_naesat(FORCED_TRIANGLE)) is None


# =============================================================================
# Reduction graph
# =============================================================================


def test_literal_nodes():
    assert [literal_node(lit) for lit in (1, -1, 2, -2, 3, -3)] == [0, 1, 2, 3, 4, 5]


def test_cycle_reduction():
    reduction = reduce_to_graph(CYCLE)
    assert reduction.W == 7
    assert reduction.M == 192
    assert reduction.graph.n == 6
    assert len(reduction.graph.edges) == 15
    assert reduction.graph.weight(0, 1) == 7
    assert reduction.graph.weight(1, 2) == 1
    data = reduction.to_dict()
    assert data["literal_map"]["-3"] == 5
    assert data["num_vars"] == 3


def test_satisfiable_reduction():
    reduction = reduce_to_graph(SATISFIABLE)
    assert reduction.W == 25
    assert reduction.M == 2064
    assert len(reduction.graph.edges) == 30
    assert reduction.graph.total_weight == 6 * 25 + 24


def test_reduction_rejects_bad_formulas():
    with pytest.raises(ValidationError):
        reduce_to_graph(CnfInstance.of(3, [(1, 2, 3)]))
    redundant = CnfInstance.of(3, [(1, 2, 3), (-1, 2), (-2, 3), (-3, 1), (1, 2, 3)])
    with pytest.raises(ValidationError):
        reduce_to_graph(redundant)


def test_witness_tree_costs_threshold():
    assignment = naesat_brute(SATISFIABLE)
    assert assignment == [False, True, True, False, True, True]
    reduction = reduce_to_graph(SATISFIABLE)
    tree = assignment_to_tree(SATISFIABLE, assignment)
    assert tree.is_binary
    assert tree.leaves == frozenset(range(12))
    assert cost(reduction.graph, tree).total == reduction.M

    flipped = [not v for v in assignment]
    assert cost(reduction.graph, assignment_to_tree(SATISFIABLE, flipped)).total == reduction.M


def test_witness_tree_errors():
    with pytest.raises(ValidationError):
        assignment_to_tree(CYCLE, [True, True, True])
    with pytest.raises(ValidationError):
        assignment_to_tree(CnfInstance(num_vars=0), [])


# =============================================================================
# Brute-force satisfiability and enumeration
# =============================================================================


def test_naesat_brute():
    assert naesat_brute(CYCLE) is None
    assert naesat_brute(CnfInstance(num_vars=0)) == []
    with pytest.raises(CapacityError):
        naesat_brute(CnfInstance(num_vars=21))


def test_naesat_brute_parallel_blocks_agree():
    phi3 = CnfInstance.of(
        4, [(1, 2, 3), (1, 2, -3), (2, 3, 4), (2, 3, -4), (1, 3, 4), (-1, -3, -4)]
    )
    rewritten = from_naesat(phi3)
    assert rewritten.num_vars == 18
    serial = naesat_brute(rewritten)
    assert serial is not None
    assert nae_satisfies(rewritten, serial)
    assert naesat_brute(rewritten, jobs=4) == serial


def test_enumerate_naestar():
    family = list(enumerate_naestar(3))
    assert len(family) == 16
    assert len(set(family)) == 16
    assert CnfInstance.of(3, [(1, 2, 3), (1, -3), (-1, 2), (-2, 3)]) in family
    assert list(enumerate_naestar(2)) == []
    assert list(enumerate_naestar(4)) == []
    with pytest.raises(CapacityError):
        list(enumerate_naestar(5))


def test_small_family_is_unsatisfiable_and_below_threshold():
    for phi in enumerate_naestar(3):
        assert naesat_brute(phi) is None
        reduction = reduce_to_graph(phi)
        _, best = max_tree_bruteforce(reduction.graph, weighted=True)
        assert best < reduction.M
