"""
Basepointed multigraphs in half-edge form.

Edge i owns half-edges 2i and 2i + 1; the pairing is h <-> h ^ 1. A loop is an
edge whose two half-edges belong to the same vertex. Levels are breadth-first
edge-count distances from the basepoint, computed once with networkx.
"""

from collections.abc import Iterable, Sequence

import networkx as nx

from ..exceptions import InvalidGraphError


class BasepointedGraph:
    """
    Connected multigraph with loops and a distinguished basepoint.

    Non-basepoint vertices have degree at least three. At each vertex the
    incident half-edges carry labels 1..degree: descending half-edges first in
    half-edge id order, then the rest in id order.

    @brief Immutable basepointed graph with levels and half-edge labels.
    """

    __slots__ = (
        "_vertex_count",
        "_basepoint",
        "_edges",
        "_degrees",
        "_levels",
        "_half_edges_at",
        "_descending_count",
        "_label",
    )

    def __init__(
        self,
        vertex_count: int,
        edges: Iterable[Sequence[int]],
        basepoint: int = 0,
        rank: int | None = None,
        min_basepoint_degree: int = 1,
        min_vertex_degree: int = 3,
    ):
        """
        Initialize and validate a basepointed graph.

        @brief Build a graph from an edge list.
        @param vertex_count Number of vertices
        @param edges Endpoint pairs in order; loops as (u, u), parallel edges repeated
        @param basepoint Basepoint vertex index
        @param rank Expected rank E - V + 1, checked when given
        @param min_basepoint_degree Smallest accepted basepoint degree
        @param min_vertex_degree Smallest accepted non-basepoint degree
        """
        self._vertex_count = vertex_count
        self._basepoint = basepoint
        self._edges = tuple((int(u), int(v)) for u, v in edges)
        self._validate_indices()

        degrees = [0] * vertex_count
        for u, v in self._edges:
            degrees[u] += 1
            degrees[v] += 1
        self._degrees = tuple(degrees)
        self._validate_shape(rank, min_basepoint_degree, min_vertex_degree)

        lengths = nx.single_source_shortest_path_length(self.to_networkx(), basepoint)
        self._levels = tuple(lengths[v] for v in range(vertex_count))

        by_vertex: list[list[int]] = [[] for _ in range(vertex_count)]
        for h in range(2 * len(self._edges)):
            by_vertex[self.owner(h)].append(h)
        ordered = []
        descending_count = []
        for v, halves in enumerate(by_vertex):
            down = [h for h in halves if self._levels[self.owner(h ^ 1)] < self._levels[v]]
            rest = [h for h in halves if h not in down]
            ordered.append(tuple(down + rest))
            descending_count.append(len(down))
        self._half_edges_at = tuple(ordered)
        self._descending_count = tuple(descending_count)
        self._label = {h: i + 1 for halves in ordered for i, h in enumerate(halves)}

    def _validate_indices(self) -> None:
        if self._vertex_count < 1:
            raise InvalidGraphError("graph needs at least one vertex")
        if not 0 <= self._basepoint < self._vertex_count:
            raise InvalidGraphError(
                "basepoint out of range",
                {"basepoint": self._basepoint, "vertex_count": self._vertex_count},
            )
        for i, (u, v) in enumerate(self._edges):
            if not (0 <= u < self._vertex_count and 0 <= v < self._vertex_count):
                raise InvalidGraphError(
                    "edge endpoint out of range", {"edge": i, "endpoints": (u, v)}
                )

    def _validate_shape(
        self, rank: int | None, min_basepoint_degree: int, min_vertex_degree: int
    ) -> None:
        if not nx.is_connected(self.to_networkx()):
            raise InvalidGraphError("graph is not connected")
        for v, degree in enumerate(self._degrees):
            if v != self._basepoint and degree < min_vertex_degree:
                raise InvalidGraphError(
                    "non-basepoint vertex degree too small", {"vertex": v, "degree": degree}
                )
        if self._degrees[self._basepoint] < min_basepoint_degree:
            raise InvalidGraphError(
                "basepoint degree below the configured minimum",
                {"degree": self._degrees[self._basepoint], "minimum": min_basepoint_degree},
            )
        if rank is not None and self.rank != rank:
            raise InvalidGraphError("rank mismatch", {"expected": rank, "actual": self.rank})

    @property
    def vertex_count(self) -> int:
        return self._vertex_count

    @property
    def basepoint(self) -> int:
        return self._basepoint

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def rank(self) -> int:
        return len(self._edges) - self._vertex_count + 1

    @property
    def total_degree(self) -> int:
        return 2 * len(self._edges)

    @property
    def levels(self) -> tuple[int, ...]:
        return self._levels

    @property
    def max_level(self) -> int:
        return max(self._levels)

    def vertices(self) -> range:
        return range(self._vertex_count)

    def non_basepoint_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self._vertex_count) if v != self._basepoint)

    def degree(self, v: int) -> int:
        return self._degrees[v]

    def level(self, v: int) -> int:
        return self._levels[v]

    def level_map(self) -> dict[int, int]:
        """Vertex to level, the edge-count distance from the basepoint."""
        return dict(enumerate(self._levels))

    def vertices_at_level(self, level: int) -> tuple[int, ...]:
        return tuple(v for v, lv in enumerate(self._levels) if lv == level)

    def owner(self, half_edge: int) -> int:
        u, v = self._edges[half_edge // 2]
        return v if half_edge % 2 else u

    @staticmethod
    def partner(half_edge: int) -> int:
        return half_edge ^ 1

    @staticmethod
    def edge_of(half_edge: int) -> int:
        return half_edge // 2

    def endpoints(self, edge: int) -> tuple[int, int]:
        return self._edges[edge]

    def is_loop(self, edge: int) -> bool:
        u, v = self._edges[edge]
        return u == v

    def half_edges_at(self, v: int) -> tuple[int, ...]:
        """Half-edges owned by v, in label order."""
        return self._half_edges_at[v]

    def half_edge_label(self, half_edge: int) -> int:
        """Label 1..degree of a half-edge at its owning vertex."""
        return self._label[half_edge]

    def descending_count(self, v: int) -> int:
        """Number of half-edges at v whose partner sits at a strictly lower level."""
        return self._descending_count[v]

    def descending_labels(self, v: int) -> frozenset[int]:
        return frozenset(range(1, self._descending_count[v] + 1))

    def to_networkx(self) -> nx.MultiGraph:
        """MultiGraph with one keyed edge per edge index."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self._vertex_count))
        for i, (u, v) in enumerate(self._edges):
            graph.add_edge(u, v, key=i)
        return graph

    def without_edge(self, edge: int) -> "BasepointedGraph":
        """
        Delete one edge, keeping vertex indices.

        Vertices may drop below degree three; the result must stay connected.

        @brief Graph minus an edge; raises InvalidGraphError when disconnected.
        """
        edges = [e for i, e in enumerate(self._edges) if i != edge]
        return BasepointedGraph(
            self._vertex_count, edges, self._basepoint, min_basepoint_degree=0, min_vertex_degree=0
        )

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "basepoint": self._basepoint,
            "vertexCount": self._vertex_count,
            "edges": [list(e) for e in self._edges],
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BasepointedGraph):
            return NotImplemented
        return (self._vertex_count, self._basepoint, self._edges) == (
            other._vertex_count,
            other._basepoint,
            other._edges,
        )

    def __hash__(self) -> int:
        return hash((self._vertex_count, self._basepoint, self._edges))

    def __repr__(self) -> str:
        return (
            f"BasepointedGraph(V={self._vertex_count}, E={len(self._edges)}, "
            f"basepoint={self._basepoint}, edges={list(self._edges)})"
        )
