"""
Vertex blow-ups.

A blow-up at a vertex is a nonempty set of pairwise compatible two-block
partitions of its half-edge labels. With nested 1-blocks a_1 < a_2 < ... < a_r
the vertex is replaced by a path v_0 - v_1 - ... - v_r: v_0 keeps a_1, v_i takes
a_{i+1} minus a_i and v_r takes the complement of a_r. v_0 keeps the old vertex
index, the other path vertices and the r path edges are appended.
"""

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from ..exceptions import (
    BlowUpError,
    IncompatiblePartitionsError,
    TrivialBlowUpError,
    WrongArityError,
)
from ..partitions.partition import TwoBlockPartition, is_compatible, is_nested, splits
from .basepointed_graph import BasepointedGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BlowUpAtVertex:
    """
    Compatible partitions of the half-edge labels at one vertex.

    @brief B_v, a nonempty compatible set.
    """

    vertex: int
    partitions: frozenset[TwoBlockPartition]

    def __post_init__(self):
        if not self.partitions:
            raise BlowUpError(
                "a blow-up at a vertex needs at least one partition", {"vertex": self.vertex}
            )
        if len({p.n for p in self.partitions}) != 1:
            raise BlowUpError(
                "partitions at a vertex must share a ground set", {"vertex": self.vertex}
            )

    @classmethod
    def of(cls, vertex: int, partitions: Iterable[TwoBlockPartition]) -> "BlowUpAtVertex":
        return cls(vertex, frozenset(partitions))

    @property
    def arity(self) -> int:
        return next(iter(self.partitions)).n

    def chain(self) -> tuple[TwoBlockPartition, ...]:
        """Partitions ordered by 1-block size."""
        return tuple(sorted(self.partitions, key=lambda p: (len(p.a), sorted(p.a))))

    def __len__(self) -> int:
        return len(self.partitions)

    def __str__(self) -> str:
        return "{" + ", ".join(str(p) for p in self.chain()) + "}"


@dataclass(frozen=True)
class GraphBlowUp:
    """
    Per-vertex blow-ups with at least one nontrivial entry.

    Vertices without an entry carry the trivial blow-up. The componentwise
    inclusion order makes blow-ups of a graph into a poset.

    @brief B = (B_v), sorted by vertex.
    """

    components: tuple[BlowUpAtVertex, ...]

    def __post_init__(self):
        vertices = [c.vertex for c in self.components]
        if not vertices:
            raise TrivialBlowUpError("a graph blow-up needs a nontrivial component")
        if len(set(vertices)) != len(vertices):
            raise BlowUpError("duplicate vertex in graph blow-up", {"vertices": vertices})
        if vertices != sorted(vertices):
            object.__setattr__(
                self, "components", tuple(sorted(self.components, key=lambda c: c.vertex))
            )

    @classmethod
    def of(cls, per_vertex: Mapping[int, Iterable[TwoBlockPartition]]) -> "GraphBlowUp":
        """
        Build from a vertex to partitions mapping; empty entries are trivial.

        @brief GraphBlowUp from a dict.
        """
        components = []
        for vertex, partitions in sorted(per_vertex.items()):
            partitions = frozenset(partitions)
            if partitions:
                components.append(BlowUpAtVertex(vertex, partitions))
        return cls(tuple(components))

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(c.vertex for c in self.components)

    def component(self, vertex: int) -> BlowUpAtVertex | None:
        for c in self.components:
            if c.vertex == vertex:
                return c
        return None

    def partitions_at(self, vertex: int) -> frozenset[TwoBlockPartition]:
        c = self.component(vertex)
        return c.partitions if c is not None else frozenset()

    def is_below(self, other: "GraphBlowUp") -> bool:
        """Strict componentwise inclusion."""
        if self == other:
            return False
        return all(c.partitions <= other.partitions_at(c.vertex) for c in self.components)

    @property
    def new_edge_count(self) -> int:
        return sum(len(c) for c in self.components)

    def __str__(self) -> str:
        return "; ".join(f"v{c.vertex}: {c}" for c in self.components)


def _check(g: BasepointedGraph, b: GraphBlowUp) -> None:
    for c in b.components:
        if not 0 <= c.vertex < g.vertex_count or c.vertex == g.basepoint:
            raise BlowUpError("blow-ups apply to non-basepoint vertices", {"vertex": c.vertex})
        if c.arity != g.degree(c.vertex):
            raise WrongArityError(
                "partition ground set differs from the vertex degree",
                {"vertex": c.vertex, "arity": c.arity, "degree": g.degree(c.vertex)},
            )
        chain = c.chain()
        for i, u in enumerate(chain):
            for v in chain[i + 1 :]:
                if not is_compatible(u, v):
                    raise IncompatiblePartitionsError(
                        "partitions at a vertex are not compatible",
                        {"vertex": c.vertex, "partitions": f"{u} {v}"},
                    )
        if not is_nested(chain):
            raise IncompatiblePartitionsError(
                "partition blocks are not nested", {"vertex": c.vertex}
            )


def blow_up(g: BasepointedGraph, b: GraphBlowUp) -> BasepointedGraph:
    """
    Realize a blow-up.

    @brief g^b, with new path edges appended after the edges of g.
    @param g Valid basepointed graph
    @param b Compatible blow-up of g
    @return Blown-up graph; levels are recomputed
    """
    _check(g, b)
    owner = [g.owner(h) for h in range(2 * g.edge_count)]
    vertex_count = g.vertex_count
    path_edges = []
    for c in b.components:
        chain = c.chain()
        path = [c.vertex] + list(range(vertex_count, vertex_count + len(chain)))
        vertex_count += len(chain)
        for h in g.half_edges_at(c.vertex):
            label = g.half_edge_label(h)
            position = sum(1 for p in chain if label not in p.a)
            owner[h] = path[position]
        path_edges.extend(zip(path, path[1:]))

    edges = [(owner[2 * e], owner[2 * e + 1]) for e in range(g.edge_count)] + path_edges
    result = BasepointedGraph(vertex_count, edges, g.basepoint, rank=g.rank)
    logger.debug("blow-up realized", extra={"operation": "blowup", "size": result.vertex_count})
    return result


def blow_up_height_level(b: GraphBlowUp, g: BasepointedGraph) -> int:
    """
    D(B): the smallest level of a vertex with a nontrivial component.

    @brief Level of a blow-up.
    """
    return min(g.level(v) for v in b.vertices)


def separates_at(g: BasepointedGraph, b: GraphBlowUp, vertex: int) -> bool:
    """
    True when some partition at the vertex splits its descending labels.

    @brief B_v separates the descending half-edges.
    """
    component = b.component(vertex)
    if component is None:
        raise BlowUpError("no nontrivial component at vertex", {"vertex": vertex})
    down = g.descending_labels(vertex)
    return any(splits(p, down) for p in component.partitions)


def is_descending_blow_up(g: BasepointedGraph, b: GraphBlowUp) -> bool:
    """
    True when b separates at some vertex on level D(B).

    @brief Descending blow-up predicate.
    """
    bottom = blow_up_height_level(b, g)
    return any(separates_at(g, b, v) for v in b.vertices if g.level(v) == bottom)
