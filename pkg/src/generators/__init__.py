"""
Instance generators
"""

from src.generators.instances import (
    clusters_sidecar,
    derive_rng,
    gen_clique,
    gen_general_planted,
    gen_line,
    gen_planted,
    gen_random_graph,
    gen_two_cliques,
    sample_planted,
)

__all__ = [
    "clusters_sidecar",
    "derive_rng",
    "gen_clique",
    "gen_general_planted",
    "gen_line",
    "gen_planted",
    "gen_random_graph",
    "gen_two_cliques",
    "sample_planted",
]
