"""
Verification Harness Module

Graph enumeration, down-links, up-links and descending links, the lemma
registry with every lemma check, the verification runner and its reports.

@brief Lemma verification for MorseLab
@author MorseLab Team
@version 1.0.0
@since 1.0.0
"""

from .enumeration import RANK_LIMIT, VERTEX_LIMIT, enumerate_graphs, enumerate_instances
from .lemma_base import GraphLemmaCheck, LemmaCheck, SigmaLemmaCheck
from .lemma_registry import (
    ALL_LEMMAS,
    LemmaRegistry,
    get_lemma,
    lemma_registry,
    list_lemmas,
    register_lemma,
)
from .links import (
    UP_LINK_VARIANTS,
    FarthestEdgeCheck,
    UpLinkCaps,
    caps_truncate,
    descending_link,
    descending_link_profile,
    down_link,
    down_link_poset,
    farthest_edge_link_check,
    farthest_edges,
    farthest_vertical_edge,
    graph_blow_ups,
    in_up_link,
    up_link_complex,
    up_link_model,
    up_link_poset,
)
from .report import (
    LemmaSummary,
    Verdict,
    VerificationReport,
    format_table,
    has_failures,
    summarize,
    to_json_lines,
)
from .runner import VerificationRunner, verify_lemma

__all__ = [
    "RANK_LIMIT",
    "VERTEX_LIMIT",
    "enumerate_graphs",
    "enumerate_instances",
    "LemmaCheck",
    "GraphLemmaCheck",
    "SigmaLemmaCheck",
    "ALL_LEMMAS",
    "LemmaRegistry",
    "lemma_registry",
    "register_lemma",
    "get_lemma",
    "list_lemmas",
    "UP_LINK_VARIANTS",
    "UpLinkCaps",
    "FarthestEdgeCheck",
    "down_link_poset",
    "down_link",
    "up_link_model",
    "graph_blow_ups",
    "caps_truncate",
    "in_up_link",
    "up_link_poset",
    "up_link_complex",
    "descending_link",
    "descending_link_profile",
    "farthest_edges",
    "farthest_vertical_edge",
    "farthest_edge_link_check",
    "Verdict",
    "VerificationReport",
    "LemmaSummary",
    "summarize",
    "format_table",
    "to_json_lines",
    "has_failures",
    "VerificationRunner",
    "verify_lemma",
]
