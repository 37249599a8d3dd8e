"""
Topology Engine Module

Finite simplicial complexes, posets and order complexes, joins, links and stars,
exact reduced integral homology through Smith normal form, greedy free-face
collapsing and a wedge-of-spheres classifier.

@brief Combinatorial topology for MorseLab
@author MorseLab Team
@version 1.0.0
@since 1.0.0
"""

from .collapse import free_face_collapse, is_collapsible
from .complex_io import (
    complex_from_dict,
    complex_to_dict,
    homology_report,
    load_complex,
    save_complex,
)
from .homology import (
    Classification,
    DegreeGroup,
    HomologyProfile,
    ProfileKind,
    classify,
    classify_profile,
    join_profile,
    reduced_homology,
)
from .poset import Poset, order_complex
from .simplicial_complex import Simplex, SimplicialComplex, join, link, star
from .snf import SmithForm, smith_from_entries, smith_normal_form

__all__ = [
    "Simplex",
    "SimplicialComplex",
    "join",
    "link",
    "star",
    "Poset",
    "order_complex",
    "SmithForm",
    "smith_normal_form",
    "smith_from_entries",
    "DegreeGroup",
    "HomologyProfile",
    "ProfileKind",
    "Classification",
    "reduced_homology",
    "classify_profile",
    "classify",
    "join_profile",
    "free_face_collapse",
    "is_collapsible",
    "complex_to_dict",
    "complex_from_dict",
    "homology_report",
    "save_complex",
    "load_complex",
]
