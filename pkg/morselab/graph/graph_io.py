"""
Graph file format.

{"rank": n, "basepoint": 0, "vertexCount": V, "edges": [[u, v], ...]}
Loops are [u, u]; parallel edges are repeated. Edge i gets half-edges 2i, 2i+1
in file order.
"""

import json
from pathlib import Path
from typing import Any

from ..exceptions import GraphFormatError
from .basepointed_graph import BasepointedGraph


def graph_from_dict(data: dict[str, Any], min_basepoint_degree: int = 1) -> BasepointedGraph:
    """
    Build a graph from a parsed graph document.

    @brief Parse the graph format.
    @param data Mapping with rank, basepoint, vertexCount and edges
    @param min_basepoint_degree Smallest accepted basepoint degree
    @return Validated BasepointedGraph
    """
    try:
        vertex_count = int(data["vertexCount"])
        basepoint = int(data.get("basepoint", 0))
        edges = [(int(u), int(v)) for u, v in data["edges"]]
        rank = data.get("rank")
        rank = int(rank) if rank is not None else None
    except (KeyError, TypeError, ValueError) as e:
        raise GraphFormatError("malformed graph document", {"error": str(e)}) from e
    return BasepointedGraph(
        vertex_count, edges, basepoint, rank=rank, min_basepoint_degree=min_basepoint_degree
    )


def graph_to_dict(g: BasepointedGraph) -> dict[str, Any]:
    return g.to_dict()


def load_graph(path: str | Path, min_basepoint_degree: int = 1) -> BasepointedGraph:
    """
    Read a graph file.

    @brief Load a graph from JSON.
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise GraphFormatError("cannot read graph file", {"path": str(path)}) from e
    except json.JSONDecodeError as e:
        raise GraphFormatError("graph file is not valid JSON", {"path": str(path)}) from e
    if not isinstance(data, dict):
        raise GraphFormatError("graph document must be a JSON object", {"path": str(path)})
    return graph_from_dict(data, min_basepoint_degree)


def save_graph(g: BasepointedGraph, path: str | Path) -> None:
    Path(path).write_text(json.dumps(g.to_dict(), sort_keys=True) + "\n", encoding="utf-8")
