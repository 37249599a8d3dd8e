"""
Enumeration of small basepointed graphs.

Graphs of rank n on V vertices have n + V - 1 edges. Every multiset of vertex
pairs of that size is tried, invalid graphs are dropped and the survivors are
reduced to one canonical representative per isomorphism class.
"""

import logging
import time
from collections.abc import Iterator
from itertools import combinations_with_replacement

from ..exceptions import BoundExceededError, InvalidGraphError
from ..graph.basepointed_graph import BasepointedGraph
from ..graph.canonical import canonical_form, canonical_key

logger = logging.getLogger(__name__)

# canonical forms try (V - 1)! relabellings per candidate
VERTEX_LIMIT = 6
RANK_LIMIT = 5


def _degree_ok(
    vertex_count: int, pairs: tuple[tuple[int, int], ...], min_basepoint: int
) -> bool:
    degrees = [0] * vertex_count
    for u, v in pairs:
        degrees[u] += 1
        degrees[v] += 1
    if degrees[0] < min_basepoint:
        return False
    return all(d >= 3 for d in degrees[1:])


def graphs_with_vertices(
    rank: int, vertex_count: int, min_basepoint_degree: int = 1
) -> list[BasepointedGraph]:
    """
    One canonical graph per isomorphism class of rank and vertex count.

    @brief Isomorphism classes with exactly V vertices.
    @param rank Rank n >= 1
    @param vertex_count Number of vertices V >= 1
    @param min_basepoint_degree Smallest accepted basepoint degree
    @return Canonical representatives sorted by canonical key
    """
    edge_count = rank + vertex_count - 1
    pairs = [(u, v) for u in range(vertex_count) for v in range(u, vertex_count)]
    classes: dict = {}
    for edges in combinations_with_replacement(pairs, edge_count):
        if not _degree_ok(vertex_count, edges, min_basepoint_degree):
            continue
        try:
            g = BasepointedGraph(
                vertex_count, edges, 0, rank=rank, min_basepoint_degree=min_basepoint_degree
            )
        except InvalidGraphError:
            continue
        key = canonical_key(g)
        if key not in classes:
            classes[key] = canonical_form(g)
    return [classes[key] for key in sorted(classes)]


def enumerate_graphs(
    rank: int, max_vertices: int, min_basepoint_degree: int = 1
) -> Iterator[BasepointedGraph]:
    """
    Every isomorphism class of valid graphs with given rank and at most max_vertices.

    @brief Deterministic enumeration, by vertex count then canonical key.
    @param rank Rank n, 1 <= n <= RANK_LIMIT
    @param max_vertices Vertex bound, 1 <= V <= VERTEX_LIMIT
    @param min_basepoint_degree Smallest accepted basepoint degree
    @throws BoundExceededError If a bound is outside the supported range
    """
    if not 1 <= rank <= RANK_LIMIT:
        raise BoundExceededError(
            "rank outside the enumerable range", {"rank": rank, "limit": RANK_LIMIT}
        )
    if not 1 <= max_vertices <= VERTEX_LIMIT:
        raise BoundExceededError(
            "vertex bound outside the enumerable range",
            {"max_vertices": max_vertices, "limit": VERTEX_LIMIT},
        )
    for vertex_count in range(1, max_vertices + 1):
        started = time.perf_counter()
        found = graphs_with_vertices(rank, vertex_count, min_basepoint_degree)
        logger.debug(
            "graphs enumerated",
            extra={
                "operation": "enumerate",
                "instance": f"rank={rank},V={vertex_count}",
                "size": len(found),
                "duration": time.perf_counter() - started,
            },
        )
        yield from found


def enumerate_instances(
    max_rank: int, max_vertices: int, min_basepoint_degree: int = 1, min_rank: int = 1
) -> list[BasepointedGraph]:
    """Graphs of every rank from min_rank to max_rank, in enumeration order."""
    graphs: list[BasepointedGraph] = []
    for rank in range(min_rank, max_rank + 1):
        graphs.extend(enumerate_graphs(rank, max_vertices, min_basepoint_degree))
    return graphs
