"""
Reduced integral homology of simplicial complexes and its classification.

Boundary matrices use lexicographic simplex order and the alternating-sign
boundary. The augmented chain complex has C_{-1} = Z, so the void complex has
reduced homology Z in degree -1 and every other complex has H_{-1} = 0.
"""

import logging
import time
from dataclasses import dataclass
from enum import Enum
from itertools import product
from math import gcd

from ..exceptions import HomologyError
from .simplicial_complex import SimplicialComplex
from .snf import SmithForm, smith_from_entries, smith_normal_form

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DegreeGroup:
    """
    A finitely generated abelian group Z^rank + torsion.

    @brief One degree of a homology profile.
    """

    rank: int = 0
    torsion: tuple[int, ...] = ()

    @property
    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def to_dict(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}


class HomologyProfile:
    """
    Reduced homology in degrees -1 through the complex dimension.

    Equality ignores trailing zero groups, so profiles of complexes of different
    dimension compare by their groups alone.

    @brief Per-degree reduced integral homology.
    """

    __slots__ = ("_groups",)

    def __init__(self, groups: dict[int, DegreeGroup]):
        top = max((d for d, g in groups.items() if not g.is_zero), default=-1)
        top = max(top, max(groups, default=-1))
        self._groups = tuple(groups.get(d, DegreeGroup()) for d in range(-1, top + 1))

    @classmethod
    def of_void(cls) -> "HomologyProfile":
        return cls({-1: DegreeGroup(rank=1)})

    def group(self, degree: int) -> DegreeGroup:
        index = degree + 1
        if 0 <= index < len(self._groups):
            return self._groups[index]
        return DegreeGroup()

    @property
    def top_degree(self) -> int:
        """Largest degree stored (the complex dimension when built from a complex)."""
        return len(self._groups) - 2

    def nonzero_degrees(self) -> tuple[int, ...]:
        return tuple(d for d in range(-1, self.top_degree + 1) if not self.group(d).is_zero)

    def ranks(self) -> dict[int, int]:
        return {d: self.group(d).rank for d in range(-1, self.top_degree + 1)}

    def reduced_euler_characteristic(self) -> int:
        return sum((-1) ** (d % 2) * self.group(d).rank for d in range(-1, self.top_degree + 1))

    def _key(self) -> tuple[DegreeGroup, ...]:
        groups = list(self._groups)
        while len(groups) > 1 and groups[-1].is_zero:
            groups.pop()
        return tuple(groups)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomologyProfile):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def to_dict(self) -> dict:
        return {str(d): self.group(d).to_dict() for d in range(-1, self.top_degree + 1)}

    def __repr__(self) -> str:
        parts = []
        for d in self.nonzero_degrees():
            g = self.group(d)
            text = f"Z^{g.rank}" if g.rank else ""
            if g.torsion:
                text += ("+" if text else "") + "+".join(f"Z/{t}" for t in g.torsion)
            parts.append(f"H{d}={text}")
        return f"HomologyProfile({', '.join(parts) or 'acyclic'})"


class ProfileKind(Enum):
    VOID = "Void"
    ACYCLIC = "AcyclicPoint"
    WEDGE = "Wedge"
    OTHER = "Other"


@dataclass(frozen=True)
class Classification:
    """
    Coarse homotopy-type reading of a homology profile.

    @brief Void, AcyclicPoint, Wedge(d, r) or Other.
    """

    kind: ProfileKind
    dimension: int | None = None
    count: int | None = None

    def __str__(self) -> str:
        if self.kind is ProfileKind.WEDGE:
            return f"Wedge({self.dimension},{self.count})"
        return self.kind.value

    @property
    def is_acyclic(self) -> bool:
        return self.kind is ProfileKind.ACYCLIC

    def is_wedge_of(self, dimension: int) -> bool:
        """Nonempty wedge of spheres of the given dimension; Void counts as S^{-1}."""
        if self.kind is ProfileKind.VOID:
            return dimension == -1
        return self.kind is ProfileKind.WEDGE and self.dimension == dimension

    def is_spherical(self, dimension: int) -> bool:
        """Wedge of spheres of the given dimension, possibly the empty wedge (a point)."""
        return self.is_acyclic or self.is_wedge_of(dimension)


def _boundary_smith(x: SimplicialComplex, dimension: int) -> SmithForm:
    """Smith form of the boundary map C_dimension -> C_{dimension-1} (augmented at 0)."""
    simplices = x.simplices_of_dimension(dimension)
    if dimension == 0:
        return smith_from_entries((i, 0, 1) for i in range(len(simplices)))
    index = {s: i for i, s in enumerate(x.simplices_of_dimension(dimension - 1))}
    entries = (
        (row, index[s[:k] + s[k + 1 :]], -1 if k % 2 else 1)
        for row, s in enumerate(simplices)
        for k in range(len(s))
    )
    return smith_from_entries(entries)


def reduced_homology(x: SimplicialComplex) -> HomologyProfile:
    """
    Reduced integral homology via boundary matrices and Smith normal form.

    @brief Compute H~_d(x; Z) for d = -1 .. dim x.
    @param x Finite simplicial complex
    @return HomologyProfile, checked against the f-vector Euler characteristic
    """
    if x.is_void:
        return HomologyProfile.of_void()
    started = time.perf_counter()
    top = x.dimension
    forms = {d: _boundary_smith(x, d) for d in range(top + 1)}
    ranks = {d: forms[d].rank for d in forms}
    ranks[top + 1] = 0
    f_vector = x.f_vector()
    groups = {-1: DegreeGroup(rank=1 - ranks[0])}
    for d in range(top + 1):
        torsion = forms[d + 1].torsion if d + 1 in forms else ()
        groups[d] = DegreeGroup(rank=f_vector[d] - ranks[d] - ranks[d + 1], torsion=torsion)
    profile = HomologyProfile(groups)

    expected = -1 + sum((-1) ** d * f for d, f in enumerate(f_vector))
    if profile.reduced_euler_characteristic() != expected:
        raise HomologyError(
            "reduced Euler characteristic disagrees with the f-vector",
            {"f_vector": f_vector, "profile": repr(profile)},
        )
    logger.debug(
        "reduced homology computed",
        extra={
            "operation": "homology",
            "size": len(x),
            "duration": time.perf_counter() - started,
        },
    )
    return profile


def classify_profile(profile: HomologyProfile) -> Classification:
    """
    Read a homology profile as Void, AcyclicPoint, Wedge(d, r) or Other.

    @brief Sphericity classifier.
    """
    if profile.group(-1).rank > 0:
        return Classification(ProfileKind.VOID, -1, 1)
    nonzero = profile.nonzero_degrees()
    if not nonzero:
        return Classification(ProfileKind.ACYCLIC)
    if len(nonzero) == 1:
        group = profile.group(nonzero[0])
        if not group.torsion:
            return Classification(ProfileKind.WEDGE, nonzero[0], group.rank)
    return Classification(ProfileKind.OTHER)


def classify(x: SimplicialComplex) -> Classification:
    """Classify a complex directly; a void complex is always Void."""
    if x.is_void:
        return Classification(ProfileKind.VOID, -1, 1)
    return classify_profile(reduced_homology(x))


def _normalize_torsion(cyclic_orders: list[int]) -> tuple[int, ...]:
    """Invariant factors of a direct sum of finite cyclic groups."""
    orders = [c for c in cyclic_orders if c > 1]
    if not orders:
        return ()
    size = len(orders)
    diagonal = [[orders[i] if i == j else 0 for j in range(size)] for i in range(size)]
    return smith_normal_form(diagonal).torsion


def _tensor(a: DegreeGroup, b: DegreeGroup) -> DegreeGroup:
    cyclic = list(a.torsion) * b.rank + list(b.torsion) * a.rank
    cyclic += [gcd(s, t) for s, t in product(a.torsion, b.torsion)]
    return DegreeGroup(rank=a.rank * b.rank, torsion=tuple(cyclic))


def _tor(a: DegreeGroup, b: DegreeGroup) -> DegreeGroup:
    return DegreeGroup(torsion=tuple(gcd(s, t) for s, t in product(a.torsion, b.torsion)))


def join_profile(left: HomologyProfile, right: HomologyProfile) -> HomologyProfile:
    """
    Reduced homology of a join from the reduced homology of its factors.

    H~_{r+1}(X*Y) = sum_{i+j=r} H~_i(X) (x) H~_j(Y) + sum_{i+j=r-1} Tor(H~_i(X), H~_j(Y)),
    with i, j >= -1.

    @brief Join formula; agrees with reduced_homology(join(x, y)).
    """
    accumulated: dict[int, tuple[int, list[int]]] = {}

    def add(degree: int, group: DegreeGroup) -> None:
        rank, cyclic = accumulated.get(degree, (0, []))
        accumulated[degree] = (rank + group.rank, cyclic + list(group.torsion))

    for i in range(-1, left.top_degree + 1):
        for j in range(-1, right.top_degree + 1):
            gi, gj = left.group(i), right.group(j)
            if gi.is_zero or gj.is_zero:
                continue
            add(i + j + 1, _tensor(gi, gj))
            add(i + j + 2, _tor(gi, gj))

    top = left.top_degree + right.top_degree + 1
    groups = {d: DegreeGroup() for d in range(-1, max(top, -1) + 1)}
    for degree, (rank, cyclic) in accumulated.items():
        groups[degree] = DegreeGroup(rank=rank, torsion=_normalize_torsion(cyclic))
    return HomologyProfile(groups)
