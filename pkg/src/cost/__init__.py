"""
Cost evaluation: plain and generalized cost, planted-model quantities
"""

from src.cost.engine import (
    CostReport,
    SplitCost,
    cost,
    edge_sum,
    generalized_cost,
    restricted_cost,
    split_costs,
    ultrametric_cost,
)
from src.cost.planted import (
    PlantedModel,
    epsilon_good,
    excess_lower_bound,
    expected_planted_cost,
    laminar_tree,
    planted_gap_bound,
    recovery_epsilon,
    two_clique_optimum,
)
from src.cost.scaling import ScalingFunction, parse_scaling

__all__ = [
    "CostReport",
    "PlantedModel",
    "ScalingFunction",
    "SplitCost",
    "cost",
    "edge_sum",
    "epsilon_good",
    "excess_lower_bound",
    "expected_planted_cost",
    "generalized_cost",
    "laminar_tree",
    "parse_scaling",
    "planted_gap_bound",
    "restricted_cost",
    "split_costs",
    "recovery_epsilon",
    "two_clique_optimum",
    "ultrametric_cost",
]
