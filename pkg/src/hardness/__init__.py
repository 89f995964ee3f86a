"""
NAESAT* formulas and their reduction to maximum-cost hierarchical clustering
"""

from src.hardness.cnf import (
    CnfInstance,
    NaeStarReport,
    dump_dimacs,
    nae_satisfies,
    parse_dimacs,
    read_dimacs,
    validate_naestar,
)
from src.hardness.reduction import (
    Reduction,
    assignment_to_tree,
    enumerate_naestar,
    literal_node,
    naesat_brute,
    reduce_to_graph,
)
from src.hardness.rewrite import from_naesat, remove_redundancies

__all__ = [
    "CnfInstance",
    "NaeStarReport",
    "Reduction",
    "assignment_to_tree",
    "dump_dimacs",
    "enumerate_naestar",
    "from_naesat",
    "literal_node",
    "nae_satisfies",
    "naesat_brute",
    "parse_dimacs",
    "read_dimacs",
    "reduce_to_graph",
    "remove_redundancies",
    "validate_naestar",
]
