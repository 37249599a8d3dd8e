"""
Descending links of basepointed graphs.

The down-link is the order complex of the descending forests. The up-link
model is the join over non-basepoint vertices of SBU(v); the up-link poset
itself is built from the graph blow-ups under enumeration caps. Their join is
the descending link.
"""

import logging
import time
from dataclasses import dataclass
from itertools import product
from math import prod

from ..exceptions import BoundExceededError, InvalidGraphError, VerificationError
from ..graph.basepointed_graph import BasepointedGraph
from ..graph.blowups import GraphBlowUp, blow_up, blow_up_height_level
from ..graph.forests import (
    EdgeKind,
    Forest,
    classify_edge,
    collapse_forest_with_edge_map,
    descending_forests,
    edge_distance,
)
from ..graph.height import Ordering, compare_heights, height
from ..partitions.blowup_posets import (
    compatible_sets,
    is_strictly_separating,
    is_weakly_separating,
    sbu_complex,
)
from ..partitions.partition import is_nested
from ..topology.homology import HomologyProfile, join_profile, reduced_homology
from ..topology.poset import Poset, order_complex
from ..topology.simplicial_complex import SimplicialComplex, join

logger = logging.getLogger(__name__)

UP_LINK_VARIANTS = ("strict", "weak", "x", "height")


def _log(operation: str, size: int, started: float) -> None:
    logger.debug(
        f"{operation} built",
        extra={"operation": operation, "size": size, "duration": time.perf_counter() - started},
    )


def down_link_poset(g: BasepointedGraph) -> Poset:
    """
    P(g): descending forests ordered by inclusion.

    @brief Down-link poset.
    """
    forests = descending_forests(g)
    return Poset.from_order(forests, Forest.is_proper_subset)


def down_link(g: BasepointedGraph) -> SimplicialComplex:
    """
    Order complex of the descending forests.

    @brief Down-link complex; void when g has no descending forest.
    @param g Valid basepointed graph
    @return Complex labelled by Forest values
    """
    started = time.perf_counter()
    x = order_complex(down_link_poset(g))
    _log("downlink", len(x), started)
    return x


def up_link_model(g: BasepointedGraph, compat: str = "paper") -> SimplicialComplex:
    """
    Join of SBU(v) over the non-basepoint vertices.

    Vertices are labelled (v, partition).

    @brief Up-link model A; void when every SBU(v) is void.
    """
    started = time.perf_counter()
    model = SimplicialComplex.void()
    for v in g.non_basepoint_vertices():
        x = sbu_complex(g, v, compat)
        labels = [(v, x.label(i)) for i in range(x.vertex_count)]
        tagged = SimplicialComplex(x.vertex_count, x.simplices, labels, check=False)
        model = join(model, tagged)
    _log("uplink-model", len(model), started)
    return model


def descending_link(g: BasepointedGraph, compat: str = "paper") -> SimplicialComplex:
    """
    Explicit join of the up-link model and the down-link.

    @brief Descending link complex.
    """
    return join(up_link_model(g, compat), down_link(g))


def join_size(x: SimplicialComplex, y: SimplicialComplex) -> int:
    """Number of simplices of x * y."""
    return (len(x) + 1) * (len(y) + 1) - 1


def descending_link_profile(
    g: BasepointedGraph, compat: str = "paper", max_join_simplices: int = 20000
) -> tuple[HomologyProfile, bool]:
    """
    Reduced homology of the descending link.

    The join is built explicitly when it stays within max_join_simplices;
    otherwise its homology comes from the join formula on the factors.

    @brief Descending link homology.
    @return (profile, True when the join was built explicitly)
    """
    model, down = up_link_model(g, compat), down_link(g)
    if join_size(model, down) <= max_join_simplices:
        return reduced_homology(join(model, down)), True
    return join_profile(reduced_homology(model), reduced_homology(down)), False


@dataclass(frozen=True)
class UpLinkCaps:
    """
    Bounds on the explicit up-link poset.

    @brief Enumeration caps for graph blow-ups.
    """

    max_blowup_degree: int = 6
    max_partitions_per_vertex: int = 2
    max_poset_elements: int = 5000

    @classmethod
    def from_run_config(cls, config) -> "UpLinkCaps":
        return cls(
            max_blowup_degree=config.max_blowup_degree,
            max_partitions_per_vertex=config.max_partitions_per_vertex,
            max_poset_elements=config.max_poset_elements,
        )


def largest_blow_up(degree: int) -> int:
    """Partitions in a maximal compatible set on degree labels."""
    return max(0, degree - 3)


def caps_truncate(g: BasepointedGraph, caps: UpLinkCaps) -> bool:
    """True when the partition cap drops blow-ups at some vertex."""
    return any(
        largest_blow_up(g.degree(v)) > caps.max_partitions_per_vertex
        for v in g.non_basepoint_vertices()
    )


def graph_blow_ups(
    g: BasepointedGraph,
    compat: str = "paper",
    caps: UpLinkCaps | None = None,
    skip_large_vertices: bool = False,
) -> tuple[GraphBlowUp, ...]:
    """
    Every nontrivial graph blow-up within the caps.

    @brief Elements of the blow-up poset of g.
    @param g Valid basepointed graph
    @param compat Compatibility mode
    @param caps Enumeration caps
    @param skip_large_vertices Keep vertices above max_blowup_degree trivial instead of failing
    @throws BoundExceededError If a vertex or the element count exceeds the caps
    """
    caps = caps or UpLinkCaps()
    vertices = g.non_basepoint_vertices()
    options = []
    for v in vertices:
        degree = g.degree(v)
        if degree > caps.max_blowup_degree:
            if not skip_large_vertices:
                raise BoundExceededError(
                    "vertex degree above the blow-up cap",
                    {"vertex": v, "degree": degree, "cap": caps.max_blowup_degree},
                )
            options.append([frozenset()])
            continue
        sets = compatible_sets(degree, compat, caps.max_partitions_per_vertex)
        options.append([frozenset(), *sets])
    count = prod(len(o) for o in options) - 1
    if count > caps.max_poset_elements:
        raise BoundExceededError(
            "blow-up poset above the element cap",
            {"elements": count, "cap": caps.max_poset_elements},
        )
    blow_ups = []
    for choice in product(*options):
        if any(choice):
            blow_ups.append(GraphBlowUp.of(dict(zip(vertices, choice))))
    return tuple(blow_ups)


def _realizable(b: GraphBlowUp) -> bool:
    return all(is_nested(c.chain()) for c in b.components)


def in_up_link(
    g: BasepointedGraph,
    b: GraphBlowUp,
    variant: str = "strict",
    height_order: str = "relative",
) -> bool:
    """
    Membership of a blow-up in one of the up-link variants.

    strict: some vertex on level D(B) has every partition splitting its
    descending labels. weak: some vertex on level D(B) has one splitting
    partition. x: some vertex on any level is strictly separating. height: the
    blow-up lowers the height.

    @brief Up-link membership predicate.
    """
    if variant == "height":
        if not _realizable(b):
            return False
        lowered = compare_heights(height(blow_up(g, b)), height(g), height_order)
        return lowered is Ordering.LT
    if variant == "x":
        candidates = b.vertices
    elif variant in ("strict", "weak"):
        bottom = blow_up_height_level(b, g)
        candidates = tuple(v for v in b.vertices if g.level(v) == bottom)
    else:
        raise VerificationError(f"unknown up-link variant '{variant}'", {"variant": variant})
    test = is_weakly_separating if variant == "weak" else is_strictly_separating
    return any(test(b.partitions_at(v), g.descending_labels(v)) for v in candidates)


def up_link_poset(
    g: BasepointedGraph,
    variant: str = "strict",
    compat: str = "paper",
    caps: UpLinkCaps | None = None,
    height_order: str = "relative",
) -> Poset:
    """
    Explicit up-link poset under componentwise inclusion.

    @brief Up-link poset L, weak L, X or the height-based poset.
    @param variant One of UP_LINK_VARIANTS
    @throws BoundExceededError If the blow-ups exceed the caps
    """
    started = time.perf_counter()
    elements = [
        b for b in graph_blow_ups(g, compat, caps) if in_up_link(g, b, variant, height_order)
    ]
    poset = Poset.from_order(elements, GraphBlowUp.is_below)
    _log(f"uplink-{variant}", len(poset), started)
    return poset


def up_link_complex(
    g: BasepointedGraph,
    variant: str = "strict",
    compat: str = "paper",
    caps: UpLinkCaps | None = None,
    height_order: str = "relative",
) -> SimplicialComplex:
    return order_complex(up_link_poset(g, variant, compat, caps, height_order))


def farthest_edges(g: BasepointedGraph) -> tuple[int, ...]:
    """Non-loop edges of maximal distance from the basepoint, by index."""
    edges = [e for e in range(g.edge_count) if not g.is_loop(e)]
    if not edges:
        return ()
    farthest = max(edge_distance(g, e) for e in edges)
    return tuple(e for e in edges if edge_distance(g, e) == farthest)


def farthest_vertical_edge(g: BasepointedGraph) -> int | None:
    """
    Smallest-index edge among the edges farthest from the basepoint.

    @brief Edge used by the down-link induction.
    @return None for a rose, or when some farthest edge is horizontal
    """
    farthest = farthest_edges(g)
    if not farthest:
        return None
    if any(classify_edge(g, e).kind is EdgeKind.HORIZONTAL for e in farthest):
        return None
    return farthest[0]


@dataclass(frozen=True)
class FarthestEdgeCheck:
    """
    Link of a farthest edge in the down-link against the down-link of the quotient.

    @brief Down-link induction step on one graph.
    """

    edge: int
    quotient: BasepointedGraph
    bijective: bool
    link_profile: HomologyProfile
    quotient_profile: HomologyProfile
    remainder_profile: HomologyProfile
    deletion_profile: HomologyProfile | None

    @property
    def homology_agrees(self) -> bool:
        return self.link_profile == self.quotient_profile


def farthest_edge_link_check(g: BasepointedGraph) -> FarthestEdgeCheck | None:
    """
    Compare the link of {e} in P(g) with P(g/e) for a farthest edge e.

    Only a vertical farthest edge needs the comparison: a horizontal edge is
    not a descending forest on its own, so P(g) minus {e} is all of P(g).

    Forests above {e} map to forests of g/e through the edge map of the
    collapse; bijective records whether this hits the descending forests of g/e
    exactly. The remainder P0 (forests avoiding e) and P(g - e) are reported
    alongside.

    @brief Down-link induction comparison; None when no farthest edge is usable.
    """
    edge = farthest_vertical_edge(g)
    if edge is None:
        return None
    poset = down_link_poset(g)
    quotient, edge_map = collapse_forest_with_edge_map(g, [edge])
    above = [f for f in poset.elements if edge in f and len(f) > 1]
    images = [Forest(frozenset(edge_map[e] for e in f if e != edge)) for f in above]
    targets = descending_forests(quotient)
    bijective = len(set(images)) == len(images) and set(images) == set(targets)

    link_poset = poset.subposet(lambda f: edge in f and len(f) > 1)
    remainder = poset.subposet(lambda f: edge not in f)
    try:
        deletion_profile = reduced_homology(down_link(g.without_edge(edge)))
    except InvalidGraphError:
        deletion_profile = None
    return FarthestEdgeCheck(
        edge=edge,
        quotient=quotient,
        bijective=bijective,
        link_profile=reduced_homology(order_complex(link_poset)),
        quotient_profile=reduced_homology(down_link(quotient)),
        remainder_profile=reduced_homology(order_complex(remainder)),
        deletion_profile=deletion_profile,
    )
