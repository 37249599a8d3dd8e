"""
The height function on basepointed graphs.

h(G) = (d_0, n_1, d_1, n_2, d_2, ...) with d_0 the sum of (degree - 2) over
non-basepoint vertices, n_i = -|level-i vertices| and d_i the total degree of
vertices off level i. Past the top level the sequence is constant (0, 2E), so a
height is stored as a finite head plus that tail pair.

Two orders are available. The literal order compares the sequences as written.
The relative order compares d_i - 2E instead of d_i for i >= 1, i.e. minus the
total degree on level i. Both agree on graphs with the same edge count; only the
relative order leaves d_i unchanged below the level where a forest collapse or
a blow-up happens, which is what the height lemmas rely on. Heights whose
relative keys tie, such as roses of different rank, are ordered literally.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from itertools import zip_longest

from .basepointed_graph import BasepointedGraph


class Ordering(Enum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"

    def reversed(self) -> "Ordering":
        return {Ordering.LT: Ordering.GT, Ordering.GT: Ordering.LT}.get(self, Ordering.EQ)


@dataclass(frozen=True)
class HeightVector:
    """
    Height of a graph as a finite head and a constant tail pair.

    @brief h(G) = (d_0, n_1, d_1, ..., n_L, d_L) then (0, 2E) repeated.
    """

    head: tuple[int, ...]
    tail: tuple[int, int]

    @property
    def d0(self) -> int:
        return self.head[0]

    @property
    def total_degree(self) -> int:
        return self.tail[1]

    def value_at(self, index: int) -> int:
        """Entry of the infinite sequence; odd indices are n_i, even indices d_i."""
        if index < len(self.head):
            return self.head[index]
        return self.tail[0] if index % 2 else self.tail[1]

    def relative_key(self) -> tuple[int, ...]:
        """
        Finite key whose lexicographic order, zero-padded, is the relative order.

        @brief Head with d_i replaced by d_i - 2E, trailing zeros dropped.
        """
        shift = self.total_degree
        key = [v - shift if i % 2 == 0 and i > 0 else v for i, v in enumerate(self.head)]
        while len(key) > 1 and key[-1] == 0:
            key.pop()
        return tuple(key)

    def __str__(self) -> str:
        return f"({', '.join(str(v) for v in self.head)}) tail ({self.tail[0]},{self.tail[1]})"

    def __lt__(self, other: "HeightVector") -> bool:
        return compare_heights(self, other) is Ordering.LT

    def __le__(self, other: "HeightVector") -> bool:
        return compare_heights(self, other) is not Ordering.GT

    def __gt__(self, other: "HeightVector") -> bool:
        return compare_heights(self, other) is Ordering.GT

    def __ge__(self, other: "HeightVector") -> bool:
        return compare_heights(self, other) is not Ordering.LT


def height(g: BasepointedGraph) -> HeightVector:
    """
    Compute h(g).

    @brief Height vector of a basepointed graph.
    @param g Valid basepointed graph
    @return HeightVector with head of length 1 + 2 * max level
    """
    p = g.basepoint
    d0 = sum(g.degree(v) - 2 for v in g.vertices() if v != p)
    head = [d0]
    total = g.total_degree
    for level in range(1, g.max_level + 1):
        on_level = g.vertices_at_level(level)
        head.append(-len(on_level))
        head.append(total - sum(g.degree(v) for v in on_level))
    return HeightVector(tuple(head), (0, total))


def compare_heights(h1: HeightVector, h2: HeightVector, order: str = "relative") -> Ordering:
    """
    Lexicographic comparison of two heights.

    The literal order pads each head with its own tail pair and then compares
    the tail pairs. The relative order compares d_i - 2E in place of d_i and
    falls back to the literal order when those keys tie, so only identical
    heights compare EQ.

    @brief Compare two height vectors.
    @param h1 Left height
    @param h2 Right height
    @param order "relative" (default) or "literal"
    @return Ordering.LT, EQ or GT
    """
    if order == "relative":
        ordering = _lexicographic(h1.relative_key(), h2.relative_key())
        if ordering is not Ordering.EQ:
            return ordering
    elif order != "literal":
        raise ValueError(f"unknown height order '{order}'")
    length = max(len(h1.head), len(h2.head)) + 2
    return _lexicographic(
        [h1.value_at(i) for i in range(length)], [h2.value_at(i) for i in range(length)]
    )


def _lexicographic(left: Sequence[int], right: Sequence[int]) -> Ordering:
    for a, b in zip_longest(left, right, fillvalue=0):
        if a != b:
            return Ordering.LT if a < b else Ordering.GT
    return Ordering.EQ
