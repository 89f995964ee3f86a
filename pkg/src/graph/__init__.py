"""
Similarity graphs: representation, edge-list I/O, complement, induced subgraphs
"""

from src.graph.core import Graph, complement, components, induced_subgraph, is_connected
from src.graph.io import dump_graph, load_graph, read_graph, write_graph

__all__ = [
    "Graph",
    "complement",
    "components",
    "dump_graph",
    "induced_subgraph",
    "is_connected",
    "load_graph",
    "read_graph",
    "write_graph",
]
