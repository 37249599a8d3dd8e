"""
Finite abstract simplicial complexes.

Simplices are sorted tuples of vertex indices in range(vertex_count). The empty
simplex is implicit: a complex with no simplices is the void complex, which plays
the role of S^{-1} and is the identity for joins. Vertices may carry labels
(partitions, forests, blow-ups) so that complexes built from combinatorial data
can be inspected afterwards.
"""

from collections.abc import Hashable, Iterable, Iterator, Sequence
from itertools import combinations

from ..exceptions import ComplexError, SimplexAbsentError

Simplex = tuple[int, ...]


def _faces(simplex: Simplex) -> Iterator[Simplex]:
    """Codimension-one faces of a simplex of dimension >= 1."""
    for i in range(len(simplex)):
        yield simplex[:i] + simplex[i + 1 :]


class SimplicialComplex:
    """
    An immutable finite simplicial complex.

    @brief Face-closed set of simplices over vertex indices 0..vertex_count-1.
    """

    __slots__ = ("_vertex_count", "_simplices", "_labels", "_by_dimension")

    def __init__(
        self,
        vertex_count: int,
        simplices: Iterable[Sequence[int]],
        labels: Sequence[Hashable] | None = None,
        check: bool = True,
    ):
        """
        Initialize a complex from its full simplex set.

        @brief Build and validate a complex.
        @param vertex_count Size of the vertex index range
        @param simplices Every nonempty simplex, closed under faces
        @param labels Optional label per vertex index
        @param check Verify ranges and face-closure
        """
        if vertex_count < 0:
            raise ComplexError("vertex_count must be non-negative", {"vertex_count": vertex_count})
        normalized = frozenset(tuple(sorted(s)) for s in simplices)
        if labels is not None and len(labels) != vertex_count:
            raise ComplexError(
                "labels must have one entry per vertex index",
                {"labels": len(labels), "vertex_count": vertex_count},
            )
        self._vertex_count = vertex_count
        self._simplices = normalized
        self._labels = tuple(labels) if labels is not None else None
        by_dimension: dict[int, list[Simplex]] = {}
        for simplex in normalized:
            by_dimension.setdefault(len(simplex) - 1, []).append(simplex)
        self._by_dimension = {d: tuple(sorted(group)) for d, group in by_dimension.items()}
        if check:
            self._validate()

    def _validate(self) -> None:
        for simplex in self._simplices:
            if not simplex:
                raise ComplexError("the empty simplex is implicit and must not be listed")
            if len(set(simplex)) != len(simplex):
                raise ComplexError("simplex repeats a vertex", {"simplex": simplex})
            if simplex[0] < 0 or simplex[-1] >= self._vertex_count:
                raise ComplexError(
                    "simplex vertex out of range",
                    {"simplex": simplex, "vertex_count": self._vertex_count},
                )
            if len(simplex) > 1:
                for face in _faces(simplex):
                    if face not in self._simplices:
                        raise ComplexError(
                            "complex is not closed under faces",
                            {"simplex": simplex, "missing": face},
                        )

    @classmethod
    def from_facets(
        cls,
        vertex_count: int,
        facets: Iterable[Sequence[int]],
        labels: Sequence[Hashable] | None = None,
    ) -> "SimplicialComplex":
        """
        Build the complex generated by the given facets.

        @brief Face closure of a facet list.
        """
        simplices: set[Simplex] = set()
        for facet in facets:
            facet = tuple(sorted(facet))
            if len(set(facet)) != len(facet):
                raise ComplexError("facet repeats a vertex", {"facet": facet})
            if facet in simplices:
                continue
            for size in range(1, len(facet) + 1):
                simplices.update(combinations(facet, size))
        return cls(vertex_count, simplices, labels, check=True)

    @classmethod
    def void(cls, vertex_count: int = 0, labels: Sequence[Hashable] | None = None):
        """The complex with no simplices (S^{-1})."""
        return cls(vertex_count, (), labels, check=False)

    @classmethod
    def full_simplex(cls, dimension: int) -> "SimplicialComplex":
        """The full simplex on dimension + 1 vertices."""
        return cls.from_facets(dimension + 1, [range(dimension + 1)])

    @classmethod
    def simplex_boundary(cls, dimension: int) -> "SimplicialComplex":
        """The boundary of the full simplex on dimension + 1 vertices."""
        vertices = tuple(range(dimension + 1))
        return cls.from_facets(dimension + 1, list(_faces(vertices)) if dimension > 0 else [])

    @property
    def vertex_count(self) -> int:
        return self._vertex_count

    @property
    def simplices(self) -> frozenset[Simplex]:
        return self._simplices

    @property
    def labels(self) -> tuple[Hashable, ...] | None:
        return self._labels

    @property
    def dimension(self) -> int:
        """Largest simplex dimension, -1 for the void complex."""
        return max(self._by_dimension, default=-1)

    @property
    def is_void(self) -> bool:
        return not self._simplices

    def label(self, vertex: int) -> Hashable:
        return self._labels[vertex] if self._labels is not None else vertex

    def simplices_of_dimension(self, dimension: int) -> tuple[Simplex, ...]:
        """Simplices of one dimension in lexicographic order."""
        return self._by_dimension.get(dimension, ())

    def vertices(self) -> tuple[int, ...]:
        """Vertex indices that span a 0-simplex."""
        return tuple(s[0] for s in self.simplices_of_dimension(0))

    def f_vector(self) -> tuple[int, ...]:
        """Simplex counts for dimensions 0..dimension."""
        return tuple(len(self.simplices_of_dimension(d)) for d in range(self.dimension + 1))

    def facets(self) -> tuple[Simplex, ...]:
        """Maximal simplices, sorted by dimension then lexicographically."""
        covered: set[Simplex] = set()
        for simplex in self._simplices:
            if len(simplex) > 1:
                covered.update(_faces(simplex))
        return tuple(
            sorted((s for s in self._simplices if s not in covered), key=lambda s: (len(s), s))
        )

    def induced_subcomplex(self, vertices: Iterable[int]) -> "SimplicialComplex":
        """
        Full subcomplex on a vertex subset, keeping vertex indices.

        @brief Simplices whose vertices all lie in the subset.
        """
        keep = set(vertices)
        return SimplicialComplex(
            self._vertex_count,
            (s for s in self._simplices if keep.issuperset(s)),
            self._labels,
            check=False,
        )

    def compacted(self) -> "SimplicialComplex":
        """Reindex used vertices to 0..k-1, carrying labels along."""
        used = self.vertices()
        index = {v: i for i, v in enumerate(used)}
        labels = [self.label(v) for v in used] if self._labels is not None else None
        return SimplicialComplex(
            len(used),
            (tuple(index[v] for v in s) for s in self._simplices),
            labels,
            check=False,
        )

    def __contains__(self, simplex: object) -> bool:
        if not isinstance(simplex, Sequence):
            return False
        return tuple(sorted(simplex)) in self._simplices

    def __len__(self) -> int:
        return len(self._simplices)

    def __iter__(self) -> Iterator[Simplex]:
        for d in range(self.dimension + 1):
            yield from self.simplices_of_dimension(d)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._simplices == other._simplices

    def __hash__(self) -> int:
        return hash(self._simplices)

    def __repr__(self) -> str:
        return (
            f"SimplicialComplex(vertices={self._vertex_count}, "
            f"dimension={self.dimension}, f_vector={self.f_vector()})"
        )


def join(x: SimplicialComplex, y: SimplicialComplex) -> SimplicialComplex:
    """
    Simplicial join; the vertices of y are shifted past those of x.

    @brief Simplices are unions of a simplex (or nothing) from each side.
    @param x Left factor
    @param y Right factor
    @return x * y, with the void complex as identity
    """
    offset = x.vertex_count
    left: list[Simplex] = [()] + sorted(x.simplices)
    right: list[Simplex] = [()] + sorted(tuple(v + offset for v in s) for s in y.simplices)
    simplices = (a + b for a in left for b in right if a or b)
    labels = None
    if x.labels is not None or y.labels is not None:
        labels = [x.label(v) for v in range(x.vertex_count)]
        labels += [y.label(v) for v in range(y.vertex_count)]
    return SimplicialComplex(x.vertex_count + y.vertex_count, simplices, labels, check=False)


def _require(x: SimplicialComplex, simplex: Sequence[int]) -> Simplex:
    key = tuple(sorted(simplex))
    if key not in x.simplices:
        raise SimplexAbsentError("simplex is not in the complex", {"simplex": key})
    return key


def star(x: SimplicialComplex, simplex: Sequence[int]) -> SimplicialComplex:
    """
    Closed star: every simplex containing the given one, with all faces.

    @brief Closed star of a simplex.
    """
    key = set(_require(x, simplex))
    return SimplicialComplex.from_facets(
        x.vertex_count, (s for s in x.simplices if key.issubset(s)), x.labels
    )


def link(x: SimplicialComplex, simplex: Sequence[int]) -> SimplicialComplex:
    """
    Link: simplices disjoint from the given one whose union with it is a simplex.

    @brief Link of a simplex; void when the simplex is maximal.
    """
    key = _require(x, simplex)
    key_set = set(key)
    members = (
        s
        for s in x.simplices
        if key_set.isdisjoint(s) and tuple(sorted(key + s)) in x.simplices
    )
    return SimplicialComplex(x.vertex_count, members, x.labels, check=False)
