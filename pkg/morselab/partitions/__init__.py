"""
Partition Complex Module

Two-block partitions and their compatibility, the complexes Sigma(n), Sigma(n, k)
and Sigma(n, k)<m with their filtration and relative links, and the blow-up
posets BU(v) and SBU(v) at a graph vertex.

@brief Partition complexes for MorseLab
@author MorseLab Team
@version 1.0.0
@since 1.0.0
"""

from .blowup_posets import (
    bu_poset,
    compatible_sets,
    is_strictly_separating,
    is_weakly_separating,
    sbu_complex,
    weak_sbu_complex,
    weak_sbu_poset,
)
from .partition import (
    COMPAT_MODES,
    TwoBlockPartition,
    all_partitions,
    is_compatible,
    is_compatible_set,
    is_nested,
    splits,
)
from .sigma import (
    PartitionComplexSpec,
    RelativeLink,
    clique_complex,
    is_labelled_subcomplex,
    labelled_simplices,
    parse_spec,
    relative_link_decomposition,
    sigma,
    sigma_filtration,
    sigma_vertices,
    size_m_new_vertices,
)

__all__ = [
    "COMPAT_MODES",
    "TwoBlockPartition",
    "all_partitions",
    "is_compatible",
    "is_compatible_set",
    "is_nested",
    "splits",
    "PartitionComplexSpec",
    "RelativeLink",
    "parse_spec",
    "sigma",
    "sigma_vertices",
    "sigma_filtration",
    "clique_complex",
    "labelled_simplices",
    "is_labelled_subcomplex",
    "relative_link_decomposition",
    "size_m_new_vertices",
    "compatible_sets",
    "bu_poset",
    "sbu_complex",
    "weak_sbu_poset",
    "weak_sbu_complex",
    "is_strictly_separating",
    "is_weakly_separating",
]
