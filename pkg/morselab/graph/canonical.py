"""
Canonical forms of basepointed graphs up to isomorphism.

Brute force over vertex permutations that send the basepoint to 0: the canonical
edge list is the lexicographically smallest sorted list of endpoint pairs. This
is exponential in V and meant for the small graphs the harness enumerates.
"""

from functools import lru_cache
from itertools import permutations

from .basepointed_graph import BasepointedGraph

CanonicalKey = tuple[int, tuple[tuple[int, int], ...]]


def _relabel(edges: tuple[tuple[int, int], ...], mapping: tuple[int, ...]) -> tuple:
    return tuple(sorted(tuple(sorted((mapping[u], mapping[v]))) for u, v in edges))


@lru_cache(maxsize=4096)
def _canonical(
    vertex_count: int, basepoint: int, edges: tuple[tuple[int, int], ...]
) -> CanonicalKey:
    others = [v for v in range(vertex_count) if v != basepoint]
    best = None
    for image in permutations(range(1, vertex_count)):
        mapping = [0] * vertex_count
        for v, target in zip(others, image):
            mapping[v] = target
        candidate = _relabel(edges, tuple(mapping))
        if best is None or candidate < best:
            best = candidate
    return vertex_count, best if best is not None else ()


def canonical_key(g: BasepointedGraph) -> CanonicalKey:
    """
    Isomorphism invariant that determines g up to basepoint-preserving isomorphism.

    @brief (V, smallest relabelled edge list).
    """
    return _canonical(g.vertex_count, g.basepoint, g.edges)


def canonical_form(g: BasepointedGraph) -> BasepointedGraph:
    """The representative of g's class with basepoint 0 and sorted edges."""
    vertex_count, edges = canonical_key(g)
    return BasepointedGraph(vertex_count, edges, 0)


def are_isomorphic(g: BasepointedGraph, h: BasepointedGraph) -> bool:
    return canonical_key(g) == canonical_key(h)


def instance_key(g: BasepointedGraph) -> str:
    """
    Stable text key of a graph's isomorphism class.

    @brief e.g. "V2:0-1,0-1,0-1".
    """
    vertex_count, edges = canonical_key(g)
    return f"V{vertex_count}:" + ",".join(f"{u}-{v}" for u, v in edges)
