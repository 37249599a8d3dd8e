"""
Partition complexes and their filtration.

Sigma(n) has the two-block partitions of {1..n} as vertices and pairwise
compatible sets as simplices. Sigma(n, k) keeps the partitions splitting
{1..k}; Sigma(n, k)<m is spanned by Sigma(n, k-1) and the vertices of Sigma(n, k)
of size below m. All of them are clique complexes of the compatibility graph.
"""

import logging
import re
import time
from collections.abc import Hashable
from dataclasses import dataclass

import networkx as nx

from ..exceptions import BadRangeError, NotASizeMVertexError, SpecFormatError
from ..topology.simplicial_complex import SimplicialComplex
from .partition import TwoBlockPartition, all_partitions, is_compatible, splits

logger = logging.getLogger(__name__)

_SPEC_PATTERN = re.compile(r"^(?:sigma:)?n=(\d+)(?:,k=(\d+))?(?:,m=(\d+))?$")


@dataclass(frozen=True)
class PartitionComplexSpec:
    """
    Parameters of Sigma(n), Sigma(n, k) or Sigma(n, k)<m.

    @brief Partition complex parameters.
    """

    n: int
    k: int | None = None
    m: int | None = None

    def __post_init__(self):
        if self.n < 2:
            raise BadRangeError("n must be at least 2", {"n": self.n})
        if self.k is not None and not 2 <= self.k <= self.n:
            raise BadRangeError("k must satisfy 2 <= k <= n", {"n": self.n, "k": self.k})
        if self.m is not None:
            if self.k is None:
                raise BadRangeError("a size bound m needs a split set k", {"m": self.m})
            if not 2 <= self.m <= self.n:
                raise BadRangeError("m must satisfy 2 <= m <= n", {"n": self.n, "m": self.m})

    def to_spec_string(self) -> str:
        text = f"sigma:n={self.n}"
        if self.k is not None:
            text += f",k={self.k}"
        if self.m is not None:
            text += f",m={self.m}"
        return text

    def __str__(self) -> str:
        if self.k is None:
            return f"Sigma({self.n})"
        if self.m is None:
            return f"Sigma({self.n},{self.k})"
        return f"Sigma({self.n},{self.k})<{self.m}"


def parse_spec(text: str) -> PartitionComplexSpec:
    """
    Parse "sigma:n=6,k=3,m=4"; the prefix and k, m are optional.

    @brief Spec string to PartitionComplexSpec.
    """
    match = _SPEC_PATTERN.match(text.replace(" ", ""))
    if match is None:
        raise SpecFormatError("expected 'sigma:n=N[,k=K][,m=M]'", {"text": text})
    n, k, m = (int(x) if x is not None else None for x in match.groups())
    return PartitionComplexSpec(n, k, m)


def _splits_prefix(p: TwoBlockPartition, k: int) -> bool:
    return k >= 1 and splits(p, range(1, k + 1))


def sigma_vertices(spec: PartitionComplexSpec) -> tuple[TwoBlockPartition, ...]:
    """
    Vertex set of the complex, in all_partitions order.

    @brief Partitions that belong to the complex.
    """
    candidates = all_partitions(spec.n)
    if spec.k is None:
        return candidates
    if spec.m is None:
        return tuple(p for p in candidates if _splits_prefix(p, spec.k))
    return tuple(
        p
        for p in candidates
        if _splits_prefix(p, spec.k - 1) or (_splits_prefix(p, spec.k) and p.size < spec.m)
    )


def clique_complex(
    vertices: tuple[TwoBlockPartition, ...], compat: str = "paper"
) -> SimplicialComplex:
    """
    Complex of pairwise compatible subsets, labelled by the partitions.

    @brief Flag complex of the compatibility graph.
    """
    graph = nx.Graph()
    graph.add_nodes_from(range(len(vertices)))
    for i, u in enumerate(vertices):
        for j in range(i + 1, len(vertices)):
            if is_compatible(u, vertices[j], compat):
                graph.add_edge(i, j)
    facets = list(nx.find_cliques(graph)) if vertices else []
    return SimplicialComplex.from_facets(len(vertices), facets, vertices)


def sigma(spec: PartitionComplexSpec, compat: str = "paper") -> SimplicialComplex:
    """
    Build Sigma(n), Sigma(n, k) or Sigma(n, k)<m.

    @brief Partition complex.
    @param spec Complex parameters
    @param compat "paper" (nested 1-blocks) or "classical"
    @return Complex whose vertex labels are TwoBlockPartitions
    """
    started = time.perf_counter()
    x = clique_complex(sigma_vertices(spec), compat)
    logger.debug(
        "partition complex built",
        extra={
            "operation": "sigma",
            "instance": spec.to_spec_string(),
            "size": len(x),
            "duration": time.perf_counter() - started,
        },
    )
    return x


def sigma_filtration(n: int) -> list[PartitionComplexSpec]:
    """
    The chain Sigma(n,2) = Sigma(n,3)<2, ..., Sigma(n,3), Sigma(n,4)<2, ..., Sigma(n).

    @brief Filtration stages from Sigma(n, 2) to Sigma(n).
    """
    if n < 4:
        raise BadRangeError("the filtration needs n >= 4", {"n": n})
    stages = [PartitionComplexSpec(n, 2)]
    for k in range(3, n):
        stages.extend(PartitionComplexSpec(n, k, m) for m in range(2, n + 1))
        stages.append(PartitionComplexSpec(n, k))
    stages.append(PartitionComplexSpec(n))
    return stages


def labelled_simplices(x: SimplicialComplex) -> frozenset[frozenset[Hashable]]:
    """Simplices as sets of vertex labels, for comparing complexes built separately."""
    return frozenset(frozenset(x.label(v) for v in s) for s in x.simplices)


def is_labelled_subcomplex(x: SimplicialComplex, y: SimplicialComplex) -> bool:
    return labelled_simplices(x) <= labelled_simplices(y)


@dataclass(frozen=True)
class RelativeLink:
    """
    Relative link of a size-m vertex and its two vertex classes.

    @brief Right-to-left part, left-to-right part and the whole link.
    """

    vertex: TwoBlockPartition
    right_to_left: SimplicialComplex
    left_to_right: SimplicialComplex
    link: SimplicialComplex


def relative_link_decomposition(
    n: int, k: int, m: int, v: TwoBlockPartition, compat: str = "paper"
) -> RelativeLink:
    """
    Split the relative link of v in Sigma(n, k)<m by 1-block inclusion.

    Right-to-left vertices w have a_w strictly containing a_v; left-to-right
    vertices have a_w strictly inside a_v.

    @brief Relative link decomposition.
    @param v Vertex of Sigma(n, k) of size m that is not in Sigma(n, k)<m
    """
    spec = PartitionComplexSpec(n, k, m)
    if v.n != n or v.size != m or not _splits_prefix(v, k) or _splits_prefix(v, k - 1):
        raise NotASizeMVertexError(
            "vertex must have size m, split {1..k} and not split {1..k-1}",
            {"vertex": str(v), "spec": str(spec)},
        )
    neighbours = tuple(w for w in sigma_vertices(spec) if is_compatible(v, w, compat))
    link = clique_complex(neighbours, compat)
    upper = [i for i, w in enumerate(neighbours) if v.a < w.a]
    lower = [i for i, w in enumerate(neighbours) if w.a < v.a]
    return RelativeLink(
        vertex=v,
        right_to_left=link.induced_subcomplex(upper).compacted(),
        left_to_right=link.induced_subcomplex(lower).compacted(),
        link=link,
    )


def size_m_new_vertices(n: int, k: int, m: int) -> tuple[TwoBlockPartition, ...]:
    """Vertices of Sigma(n, k) of size m that are not in Sigma(n, k)<m."""
    return tuple(
        p
        for p in all_partitions(n)
        if p.size == m and _splits_prefix(p, k) and not _splits_prefix(p, k - 1)
    )
