"""
Cluster trees: construction, LCA queries, splits, surgery and enumeration
"""

from src.tree.cluster_tree import ClusterTree, Split, TreeNode, canonicalize, order_key
from src.tree.enumeration import count_binary_trees, enumerate_trees
from src.tree.operations import (
    balanced_tree,
    binarize,
    lca_subtree_size,
    line_chain_tree,
    replace_subtree,
    restrict,
    splits,
    tree_distance,
)

__all__ = [
    "ClusterTree",
    "Split",
    "TreeNode",
    "balanced_tree",
    "binarize",
    "canonicalize",
    "count_binary_trees",
    "enumerate_trees",
    "lca_subtree_size",
    "order_key",
    "line_chain_tree",
    "replace_subtree",
    "restrict",
    "splits",
    "tree_distance",
]
