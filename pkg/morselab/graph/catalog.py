"""
Named example graphs.

Vertex 0 is the basepoint in every catalogue graph.
"""

from collections.abc import Callable

from ..exceptions import GraphFormatError
from .basepointed_graph import BasepointedGraph


def rose(n: int) -> BasepointedGraph:
    """The basepoint with n loops."""
    return BasepointedGraph(1, [(0, 0)] * n, 0)


def theta() -> BasepointedGraph:
    """p and v joined by three parallel edges."""
    return BasepointedGraph(2, [(0, 1), (0, 1), (0, 1)], 0)


def g3() -> BasepointedGraph:
    """Edge p-v, a double edge v-w and a loop at w."""
    return BasepointedGraph(3, [(0, 1), (1, 2), (1, 2), (2, 2)], 0)


def g4() -> BasepointedGraph:
    """Two parallel p-v edges and a loop at v."""
    return BasepointedGraph(2, [(0, 1), (0, 1), (1, 1)], 0)


def unique_descending() -> BasepointedGraph:
    """Edge p-v and a loop at v; v has a single descending edge."""
    return BasepointedGraph(2, [(0, 1), (1, 1)], 0)


def square() -> BasepointedGraph:
    """
    p joined to u and u', with two horizontal edges between u and u'.

    Edge 2 is the horizontal edge used as the non-descending forest example.
    """
    return BasepointedGraph(3, [(0, 1), (0, 2), (1, 2), (1, 2)], 0)


def tall() -> BasepointedGraph:
    """
    Rank-2 graph with a horizontal double edge on level 2.

    Collapsing one of the level-2 edges joins two level-2 vertices; under the
    literal height order the height still drops.
    """
    return BasepointedGraph(4, [(0, 1), (1, 2), (1, 3), (2, 3), (2, 3)], 0)


CATALOG: dict[str, Callable[[], BasepointedGraph]] = {
    "r1": lambda: rose(1),
    "r2": lambda: rose(2),
    "r3": lambda: rose(3),
    "theta": theta,
    "g3": g3,
    "g4": g4,
    "unique_descending": unique_descending,
    "square": square,
    "tall": tall,
}


def catalog_graph(name: str) -> BasepointedGraph:
    """
    Look up a catalogue graph; "rose<n>" builds any rose.

    @brief Named graph by key.
    """
    key = name.lower()
    if key in CATALOG:
        return CATALOG[key]()
    if key.startswith("rose") and key[4:].isdigit():
        return rose(int(key[4:]))
    raise GraphFormatError("unknown catalogue graph", {"name": name, "known": ", ".join(CATALOG)})
