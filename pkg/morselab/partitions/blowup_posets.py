"""
Blow-up posets at a vertex.

BU(v) is the poset of nonempty compatible partition sets on the half-edge labels
at v, ordered by inclusion. SBU(v) keeps the sets in which every partition
splits the descending labels {1..d}; it is Sigma(degree(v), d). The weak variant
keeps sets with at least one splitting partition.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from ..topology.poset import Poset, order_complex
from ..topology.simplicial_complex import SimplicialComplex
from .partition import TwoBlockPartition, splits
from .sigma import PartitionComplexSpec, sigma

if TYPE_CHECKING:
    from ..graph.basepointed_graph import BasepointedGraph

PartitionSet = frozenset[TwoBlockPartition]


def compatible_sets(
    degree: int, compat: str = "paper", max_size: int | None = None
) -> tuple[PartitionSet, ...]:
    """
    Nonempty compatible partition sets on {1..degree}, optionally size-capped.

    @brief Simplices of Sigma(degree) as partition sets.
    """
    if degree < 4:
        return ()
    x = sigma(PartitionComplexSpec(degree), compat)
    sets = [frozenset(x.label(v) for v in s) for s in x]
    if max_size is not None:
        sets = [s for s in sets if len(s) <= max_size]
    return tuple(sets)


def _sort_key(s: PartitionSet) -> tuple:
    return (len(s), sorted(p.sort_key() for p in s))


def _inclusion_poset(sets: tuple[PartitionSet, ...]) -> Poset:
    ordered = sorted(sets, key=_sort_key)
    return Poset.from_order(ordered, lambda a, b: a < b)


def bu_poset(
    g: BasepointedGraph, v: int, compat: str = "paper", max_size: int | None = None
) -> Poset:
    """
    BU(v): blow-ups at v ordered by inclusion.

    @brief Blow-up poset at a vertex.
    @param g Valid basepointed graph
    @param v Non-basepoint vertex
    @param compat Compatibility mode
    @param max_size Optional cap on partitions per blow-up
    """
    return _inclusion_poset(compatible_sets(g.degree(v), compat, max_size))


def is_strictly_separating(s: PartitionSet, descending: frozenset[int]) -> bool:
    return all(splits(p, descending) for p in s)


def is_weakly_separating(s: PartitionSet, descending: frozenset[int]) -> bool:
    return any(splits(p, descending) for p in s)


def sbu_complex(g: BasepointedGraph, v: int, compat: str = "paper") -> SimplicialComplex:
    """
    SBU(v) as Sigma(degree(v), d), d the number of descending half-edges.

    @brief Separating blow-ups at v; void when d <= 1 or degree(v) <= 3.
    """
    degree, d = g.degree(v), g.descending_count(v)
    if d <= 1 or degree <= 3:
        return SimplicialComplex.void()
    return sigma(PartitionComplexSpec(degree, d), compat)


def weak_sbu_poset(
    g: BasepointedGraph, v: int, compat: str = "paper", max_size: int | None = None
) -> Poset:
    """
    Blow-ups at v with at least one partition splitting the descending labels.

    @brief Weak SBU(v) poset.
    """
    down = g.descending_labels(v)
    sets = compatible_sets(g.degree(v), compat, max_size)
    return _inclusion_poset(tuple(s for s in sets if is_weakly_separating(s, down)))


def weak_sbu_complex(g: BasepointedGraph, v: int, compat: str = "paper") -> SimplicialComplex:
    """Order complex of the weak SBU(v) poset."""
    return order_complex(weak_sbu_poset(g, v, compat))
