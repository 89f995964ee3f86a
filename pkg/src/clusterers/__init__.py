"""
Tree builders: greedy top-down splitting, exact oracles, linkage baselines, experiments
"""

from src.clusterers.experiment import (
    approximation_experiment,
    generalized_bound,
    planted_experiment,
    run_experiment,
    summarize,
    with_aggregate,
)
from src.clusterers.greedy import GreedyOutcome, make_tree, make_tree_generalized, run_greedy
from src.clusterers.linkage import LINKAGE_METHODS, linkage
from src.clusterers.oracles import (
    line_costs,
    max_tree_bruteforce,
    optimal_line_tree,
    optimal_tree_bruteforce,
    optimal_tree_exhaustive,
)

__all__ = [
    "GreedyOutcome",
    "LINKAGE_METHODS",
    "approximation_experiment",
    "generalized_bound",
    "line_costs",
    "linkage",
    "make_tree",
    "make_tree_generalized",
    "max_tree_bruteforce",
    "optimal_line_tree",
    "optimal_tree_bruteforce",
    "optimal_tree_exhaustive",
    "planted_experiment",
    "run_experiment",
    "run_greedy",
    "summarize",
    "with_aggregate",
]
