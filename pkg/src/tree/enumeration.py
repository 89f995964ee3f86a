"""
Exhaustive enumeration of leaf-labelled trees, used as a test oracle.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from functools import lru_cache
from typing import Any

from src.config.constants import ENUMERATION_CAP
from src.tree.cluster_tree import ClusterTree, canonicalize
from src.utils.errors import CapacityError, ValidationError


def _insert_leaf(nested: Any, leaf: int) -> Iterator[Any]:
    """Every way to attach `leaf` as a new sibling above one node of `nested`."""
    yield [nested, leaf]
    if isinstance(nested, int):
        return
    for pos, child in enumerate(nested):
        for grown in _insert_leaf(child, leaf):
            yield [*nested[:pos], grown, *nested[pos + 1 :]]


def _binary_nested(n: int) -> Iterator[Any]:
    if n == 1:
        yield 0
        return
    for smaller in _binary_nested(n - 1):
        yield from _insert_leaf(smaller, n - 1)


def _set_partitions(items: tuple[int, ...]) -> Iterator[list[tuple[int, ...]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for sub in _set_partitions(rest):
        yield [(first,), *sub]
        for idx in range(len(sub)):
            yield [*sub[:idx], (first, *sub[idx]), *sub[idx + 1 :]]


@lru_cache(maxsize=None)
def _all_nested(items: tuple[int, ...]) -> tuple[Any, ...]:
    if len(items) == 1:
        return (items[0],)
    out: list[Any] = []
    for blocks in _set_partitions(items):
        if len(blocks) < 2:
            continue
        choices = [_all_nested(tuple(sorted(block))) for block in blocks]
        out.extend(list(combo) for combo in itertools.product(*choices))
    return tuple(out)


def enumerate_trees(n: int, binary: bool = True) -> Iterator[ClusterTree]:
    """
    Yield every rooted tree on leaves 0..n-1 exactly once.

    With binary=True the stream has (2n-3)!! trees, built by inserting leaf k above
    each node of every tree on 0..k-1. With binary=False all trees whose internal
    nodes have >= 2 children are produced (1, 1, 4, 26, 236, 2752, ...).

    Raises:
        ValidationError: If n < 1
        CapacityError: If n exceeds ENUMERATION_CAP
    """
    if n < 1:
        raise ValidationError(f"enumeration needs n >= 1, got {n}")
    if n > ENUMERATION_CAP:
        raise CapacityError("tree enumeration", n, ENUMERATION_CAP)

    if binary:
        for nested in _binary_nested(n):
            yield ClusterTree(canonicalize(nested))
        return
    for nested in _all_nested(tuple(range(n))):
        yield ClusterTree(canonicalize(nested))


def count_binary_trees(n: int) -> int:
    """(2n-3)!!, the number of rooted binary trees on n labelled leaves."""
    if n < 1:
        raise ValidationError(f"tree count needs n >= 1, got {n}")
    total = 1
    for k in range(3, 2 * n - 2, 2):
        total *= k
    return total
