"""
Forests, forest collapses and edge classification.
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

import networkx as nx

from ..exceptions import EmptyForestError, NotAForestError
from .basepointed_graph import BasepointedGraph


@dataclass(frozen=True)
class Forest:
    """
    A set of edge indices of a graph, acyclic as a subgraph.

    @brief Forest by edge index.
    """

    edges: frozenset[int]

    @classmethod
    def of(cls, *edges: int) -> "Forest":
        return cls(frozenset(edges))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.edges))

    def __contains__(self, edge: object) -> bool:
        return edge in self.edges

    def is_proper_subset(self, other: "Forest") -> bool:
        return self.edges < other.edges

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.edges), tuple(sorted(self.edges)))

    def __str__(self) -> str:
        return "{" + ",".join(f"e{e}" for e in sorted(self.edges)) + "}"


def _as_forest(f: Forest | Iterable[int]) -> Forest:
    return f if isinstance(f, Forest) else Forest(frozenset(f))


def _forest_subgraph(g: BasepointedGraph, f: Forest) -> nx.MultiGraph:
    sub = nx.MultiGraph()
    for e in f:
        u, v = g.endpoints(e)
        sub.add_edge(u, v, key=e)
    return sub


def check_forest(g: BasepointedGraph, f: Forest | Iterable[int]) -> Forest:
    """
    Validate that an edge set is a forest of g.

    @brief Raise NotAForestError for loops, cycles or unknown edges.
    """
    f = _as_forest(f)
    for e in f:
        if not 0 <= e < g.edge_count:
            raise NotAForestError("edge index out of range", {"edge": e})
        if g.is_loop(e):
            raise NotAForestError("forest contains a loop", {"edge": e})
    if f.edges and not nx.is_forest(_forest_subgraph(g, f)):
        raise NotAForestError("edge set contains a cycle", {"forest": str(f)})
    return f


def collapse_forest_with_edge_map(
    g: BasepointedGraph, f: Forest | Iterable[int]
) -> tuple[BasepointedGraph, dict[int, int]]:
    """
    Collapse each component of a forest to a vertex.

    Surviving vertices keep their relative order, with each component represented
    at the position of its smallest vertex; surviving edges keep their order.

    @brief Quotient graph g/f and the old-to-new edge index map.
    @param g Valid basepointed graph
    @param f Forest of g, possibly empty
    @return (g/f, map from surviving edge indices of g to edge indices of g/f)
    """
    f = check_forest(g, f)
    representative = list(g.vertices())
    for component in nx.connected_components(_forest_subgraph(g, f)):
        root = min(component)
        for v in component:
            representative[v] = root
    roots = sorted(set(representative))
    new_index = {root: i for i, root in enumerate(roots)}
    vertex_map = [new_index[representative[v]] for v in g.vertices()]

    edges = []
    edge_map = {}
    for e, (u, v) in enumerate(g.edges):
        if e in f:
            continue
        edge_map[e] = len(edges)
        edges.append((vertex_map[u], vertex_map[v]))
    quotient = BasepointedGraph(len(roots), edges, vertex_map[g.basepoint], rank=g.rank)
    return quotient, edge_map


def collapse_forest(g: BasepointedGraph, f: Forest | Iterable[int]) -> BasepointedGraph:
    """
    Blow down a forest.

    @brief g/f; the empty forest returns an equal graph.
    """
    return collapse_forest_with_edge_map(g, f)[0]


def forest_height(g: BasepointedGraph, f: Forest | Iterable[int]) -> int:
    """
    D(F): the smallest level among endpoints of edges of F.

    @brief Level of a nonempty forest.
    """
    f = _as_forest(f)
    if not f.edges:
        raise EmptyForestError("forest height needs a nonempty forest")
    return min(g.level(v) for e in f for v in g.endpoints(e))


def is_descending_forest(g: BasepointedGraph, f: Forest | Iterable[int]) -> bool:
    """
    True when no component of f contains two vertices on level D(F).

    @brief Descending blow-down predicate.
    @param g Valid basepointed graph
    @param f Nonempty forest of g
    """
    f = check_forest(g, f)
    bottom = forest_height(g, f)
    for component in nx.connected_components(_forest_subgraph(g, f)):
        if sum(1 for v in component if g.level(v) == bottom) > 1:
            return False
    return True


class EdgeKind(Enum):
    HORIZONTAL = "Horizontal"
    VERTICAL_DESCENDING = "VerticalDescending"


@dataclass(frozen=True)
class EdgeClass:
    """Horizontal, or vertical descending from an upper to a lower endpoint."""

    kind: EdgeKind
    upper: int | None = None
    lower: int | None = None

    def __str__(self) -> str:
        if self.kind is EdgeKind.HORIZONTAL:
            return self.kind.value
        return f"{self.kind.value}({self.upper}, {self.lower})"


def classify_edge(g: BasepointedGraph, edge: int) -> EdgeClass:
    """
    Compare endpoint levels; loops are horizontal.

    @brief Horizontal or VerticalDescending(from, to).
    """
    u, v = g.endpoints(edge)
    if g.level(u) == g.level(v):
        return EdgeClass(EdgeKind.HORIZONTAL)
    if g.level(u) < g.level(v):
        u, v = v, u
    return EdgeClass(EdgeKind.VERTICAL_DESCENDING, upper=u, lower=v)


def edge_distance(g: BasepointedGraph, edge: int) -> int:
    """Distance of an edge from the basepoint: the larger endpoint level."""
    return max(g.level(v) for v in g.endpoints(edge))


def unique_descending_edge_vertices(g: BasepointedGraph) -> frozenset[int]:
    """
    Non-basepoint vertices with exactly one descending edge.

    @brief Vertices certifying a unique descending edge.
    """
    return frozenset(v for v in g.non_basepoint_vertices() if g.descending_count(v) == 1)


def has_unique_descending_edge(g: BasepointedGraph) -> bool:
    return bool(unique_descending_edge_vertices(g))


def candidate_forests(g: BasepointedGraph) -> Iterator[Forest]:
    """Every nonempty forest of g, by size then edge indices."""
    edges = [e for e in range(g.edge_count) if not g.is_loop(e)]
    for size in range(1, g.vertex_count):
        for subset in combinations(edges, size):
            forest = Forest(frozenset(subset))
            if nx.is_forest(_forest_subgraph(g, forest)):
                yield forest


def descending_forests(g: BasepointedGraph) -> tuple[Forest, ...]:
    """
    Nonempty forests whose collapse lowers the height.

    @brief Elements of the down-link poset.
    """
    return tuple(f for f in candidate_forests(g) if is_descending_forest(g, f))


def separating_edges(g: BasepointedGraph) -> tuple[int, ...]:
    """
    Non-loop edges whose removal disconnects the graph.

    @brief Cone points of the down-link.
    """
    graph = g.to_networkx()
    separating = []
    for e in range(g.edge_count):
        if g.is_loop(e):
            continue
        u, v = g.endpoints(e)
        graph.remove_edge(u, v, key=e)
        if not nx.is_connected(graph):
            separating.append(e)
        graph.add_edge(u, v, key=e)
    return tuple(separating)
