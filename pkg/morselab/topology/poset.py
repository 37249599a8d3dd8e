"""
Finite posets and their order complexes.
"""

from collections.abc import Callable, Hashable, Iterable, Sequence

from ..exceptions import PosetError
from .simplicial_complex import SimplicialComplex


class Poset:
    """
    A finite strict partial order.

    Elements are hashable values kept in the given order; the relation is closed
    under transitivity at construction and checked to be irreflexive.

    @brief Finite poset with element labels.
    """

    __slots__ = ("_elements", "_index", "_above")

    def __init__(
        self, elements: Sequence[Hashable], relations: Iterable[tuple[Hashable, Hashable]]
    ):
        """
        Initialize from generating relations a < b.

        @brief Build the transitive closure of the given relations.
        @param elements Distinct poset elements
        @param relations Pairs (a, b) meaning a < b
        """
        self._elements = tuple(elements)
        self._index = {e: i for i, e in enumerate(self._elements)}
        if len(self._index) != len(self._elements):
            raise PosetError("poset elements must be distinct")
        successors: list[set[int]] = [set() for _ in self._elements]
        for a, b in relations:
            try:
                successors[self._index[a]].add(self._index[b])
            except KeyError as e:
                raise PosetError("relation mentions an unknown element", {"element": e}) from None
        self._above = self._close(successors)

    @staticmethod
    def _close(successors: list[set[int]]) -> tuple[frozenset[int], ...]:
        above: list[frozenset[int] | None] = [None] * len(successors)
        visiting: set[int] = set()

        def reach(i: int) -> frozenset[int]:
            cached = above[i]
            if cached is not None:
                return cached
            if i in visiting:
                raise PosetError("order relation has a cycle", {"element_index": i})
            visiting.add(i)
            result: set[int] = set()
            for j in successors[i]:
                result.add(j)
                result |= reach(j)
            visiting.discard(i)
            if i in result:
                raise PosetError("order relation is not irreflexive", {"element_index": i})
            above[i] = frozenset(result)
            return above[i]

        return tuple(reach(i) for i in range(len(successors)))

    @classmethod
    def from_order(
        cls, elements: Sequence[Hashable], less_than: Callable[[Hashable, Hashable], bool]
    ) -> "Poset":
        """
        Build a poset by testing every ordered pair.

        @brief Poset from a strict-order predicate.
        """
        elements = tuple(elements)
        relations = [(a, b) for a in elements for b in elements if a != b and less_than(a, b)]
        return cls(elements, relations)

    @property
    def elements(self) -> tuple[Hashable, ...]:
        return self._elements

    def __len__(self) -> int:
        return len(self._elements)

    def __contains__(self, element: object) -> bool:
        return element in self._index

    def less(self, a: Hashable, b: Hashable) -> bool:
        """True when a < b."""
        return self._index[b] in self._above[self._index[a]]

    def above(self, element: Hashable) -> tuple[Hashable, ...]:
        """Elements strictly greater than the given one, in element order."""
        return tuple(self._elements[j] for j in sorted(self._above[self._index[element]]))

    def below(self, element: Hashable) -> tuple[Hashable, ...]:
        """Elements strictly smaller than the given one, in element order."""
        i = self._index[element]
        return tuple(e for j, e in enumerate(self._elements) if i in self._above[j])

    def minimal_elements(self) -> tuple[Hashable, ...]:
        has_lower = set().union(*self._above) if self._above else set()
        return tuple(e for i, e in enumerate(self._elements) if i not in has_lower)

    def covering_pairs(self) -> tuple[tuple[Hashable, Hashable], ...]:
        """Pairs (a, b) with a < b and nothing strictly between."""
        pairs = []
        for i, ups in enumerate(self._above):
            for j in sorted(ups):
                if not any(j in self._above[k] for k in ups if k != j):
                    pairs.append((self._elements[i], self._elements[j]))
        return tuple(pairs)

    def subposet(self, keep: Callable[[Hashable], bool]) -> "Poset":
        """Induced subposet on the elements satisfying a predicate."""
        elements = [e for e in self._elements if keep(e)]
        kept = set(elements)
        relations = [(a, b) for a in elements for b in self.above(a) if b in kept]
        return Poset(elements, relations)

    def __repr__(self) -> str:
        return f"Poset(elements={len(self._elements)})"


def order_complex(poset: Poset) -> SimplicialComplex:
    """
    Simplicial complex of chains of a poset.

    @brief Vertex i is the i-th element; simplices are chains.
    @param poset Finite poset
    @return Order complex labelled by the poset elements
    """
    above = poset._above
    chains: list[tuple[int, ...]] = []

    def extend(chain: tuple[int, ...], candidates: frozenset[int]) -> None:
        chains.append(chain)
        for j in candidates:
            extend(chain + (j,), candidates & above[j])

    for i in range(len(poset)):
        extend((i,), above[i])
    return SimplicialComplex(len(poset), chains, poset.elements, check=False)
