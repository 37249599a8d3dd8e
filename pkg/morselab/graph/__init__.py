"""
Graph Core Module

Basepointed multigraphs in half-edge form, levels, the height function and its
orders, forests and forest collapses, vertex blow-ups, canonical forms, the
graph file format and a catalogue of named examples.

@brief Basepointed graphs for MorseLab
@author MorseLab Team
@version 1.0.0
@since 1.0.0
"""

from .basepointed_graph import BasepointedGraph
from .blowups import (
    BlowUpAtVertex,
    GraphBlowUp,
    blow_up,
    blow_up_height_level,
    is_descending_blow_up,
    separates_at,
)
from .canonical import are_isomorphic, canonical_form, canonical_key, instance_key
from .catalog import CATALOG, catalog_graph, g3, g4, rose, square, tall, theta, unique_descending
from .forests import (
    EdgeClass,
    EdgeKind,
    Forest,
    candidate_forests,
    check_forest,
    classify_edge,
    collapse_forest,
    collapse_forest_with_edge_map,
    descending_forests,
    edge_distance,
    forest_height,
    has_unique_descending_edge,
    is_descending_forest,
    separating_edges,
    unique_descending_edge_vertices,
)
from .graph_io import graph_from_dict, graph_to_dict, load_graph, save_graph
from .height import HeightVector, Ordering, compare_heights, height

__all__ = [
    "BasepointedGraph",
    "HeightVector",
    "Ordering",
    "height",
    "compare_heights",
    "Forest",
    "EdgeKind",
    "EdgeClass",
    "check_forest",
    "collapse_forest",
    "collapse_forest_with_edge_map",
    "forest_height",
    "is_descending_forest",
    "classify_edge",
    "edge_distance",
    "unique_descending_edge_vertices",
    "has_unique_descending_edge",
    "candidate_forests",
    "descending_forests",
    "separating_edges",
    "BlowUpAtVertex",
    "GraphBlowUp",
    "blow_up",
    "blow_up_height_level",
    "separates_at",
    "is_descending_blow_up",
    "canonical_key",
    "canonical_form",
    "are_isomorphic",
    "instance_key",
    "graph_from_dict",
    "graph_to_dict",
    "load_graph",
    "save_graph",
    "CATALOG",
    "catalog_graph",
    "rose",
    "theta",
    "g3",
    "g4",
    "unique_descending",
    "square",
    "tall",
]
