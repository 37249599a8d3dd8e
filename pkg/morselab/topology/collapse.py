"""
Greedy elementary collapses.

A face is free when exactly one other simplex contains it; that simplex is then
maximal and one dimension higher, and removing the pair is a deformation
retraction. Collapsing until no free face remains gives a core with the same
homotopy type. Reaching a single vertex certifies contractibility; getting
stuck proves nothing, since greedy collapsing is order dependent.
"""

import logging

from .simplicial_complex import Simplex, SimplicialComplex

logger = logging.getLogger(__name__)


def _facets_of(simplex: Simplex) -> list[Simplex]:
    if len(simplex) < 2:
        return []
    return [simplex[:i] + simplex[i + 1 :] for i in range(len(simplex))]


def free_face_collapse(x: SimplicialComplex) -> SimplicialComplex:
    """
    Remove free-face pairs until none remain.

    Candidates are scanned from the highest dimension down and lexicographically
    within a dimension, so the result is deterministic.

    @brief Greedy collapse to a core.
    @param x Finite simplicial complex
    @return Subcomplex of x with no free faces
    """
    alive = set(x.simplices)
    cofaces: dict[Simplex, set[Simplex]] = {s: set() for s in alive}
    for simplex in alive:
        for face in _facets_of(simplex):
            cofaces[face].add(simplex)

    removed_pairs = 0
    progress = True
    while progress:
        progress = False
        for face in sorted(alive, key=lambda s: (-len(s), s)):
            if face not in alive or len(cofaces[face]) != 1:
                continue
            (coface,) = cofaces[face]
            if cofaces[coface]:
                continue
            for simplex in (coface, face):
                alive.discard(simplex)
                for sub in _facets_of(simplex):
                    cofaces[sub].discard(simplex)
            removed_pairs += 1
            progress = True

    logger.debug(
        "free-face collapse finished",
        extra={"operation": "collapse", "size": len(x), "removed_pairs": removed_pairs},
    )
    return SimplicialComplex(x.vertex_count, alive, x.labels, check=False)


def is_collapsible(x: SimplicialComplex) -> bool:
    """True when greedy collapsing reaches a single vertex."""
    core = free_face_collapse(x)
    return len(core) == 1
