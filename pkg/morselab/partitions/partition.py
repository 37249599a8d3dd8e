"""
Two-block partitions of {1, ..., n} and their compatibility.

A partition {a, a_bar} is normalized so that a contains the label 1; its size
is |a_bar|. Both blocks have at least two labels.
"""

from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from ..exceptions import InvalidPartitionError, SamePartitionError

COMPAT_MODES = ("paper", "classical")


@dataclass(frozen=True)
class TwoBlockPartition:
    """
    A partition of {1..n} into the block a containing 1 and its complement.

    @brief Normalized two-block partition.
    """

    n: int
    a: frozenset[int]

    def __post_init__(self):
        ground = frozenset(range(1, self.n + 1))
        if not self.a <= ground:
            raise InvalidPartitionError(
                "block is not inside the ground set", {"block": sorted(self.a), "n": self.n}
            )
        if 1 not in self.a:
            object.__setattr__(self, "a", ground - self.a)
        if len(self.a) < 2 or self.n - len(self.a) < 2:
            raise InvalidPartitionError(
                "both blocks need at least two labels", {"block": sorted(self.a), "n": self.n}
            )

    @classmethod
    def of(cls, n: int, block: Iterable[int]) -> "TwoBlockPartition":
        """Partition with the given block (either side) of {1..n}."""
        return cls(n, frozenset(block))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "TwoBlockPartition":
        """
        Parse "1,3|2,4" (parentheses and spaces allowed).

        @brief Partition from its display form.
        """
        body = text.strip().strip("()")
        if body.count("|") != 1:
            raise InvalidPartitionError("partition needs exactly one '|'", {"text": text})
        left, right = body.split("|")
        try:
            a = frozenset(int(x) for x in left.replace(" ", "").split(",") if x)
            a_bar = frozenset(int(x) for x in right.replace(" ", "").split(",") if x)
        except ValueError as e:
            raise InvalidPartitionError("partition labels must be integers", {"text": text}) from e
        size = len(a) + len(a_bar)
        if a & a_bar or a | a_bar != frozenset(range(1, size + 1)):
            raise InvalidPartitionError("blocks must partition 1..n", {"text": text})
        if n is not None and n != size:
            raise InvalidPartitionError(
                "partition has the wrong ground set", {"text": text, "n": n}
            )
        return cls(size, a)

    @property
    def a_bar(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1)) - self.a

    @property
    def size(self) -> int:
        return self.n - len(self.a)

    def sort_key(self) -> tuple[int, int, tuple[int, ...]]:
        return (self.n, len(self.a), tuple(sorted(self.a)))

    def __lt__(self, other: "TwoBlockPartition") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        left = ", ".join(str(x) for x in sorted(self.a))
        right = ", ".join(str(x) for x in sorted(self.a_bar))
        return f"({left} | {right})"


def is_compatible(u: TwoBlockPartition, v: TwoBlockPartition, mode: str = "paper") -> bool:
    """
    Compatibility of two distinct partitions.

    Paper mode: a_u inside a_v or a_bar_u inside a_bar_v, strictly, so the
    1-blocks are nested. Classical mode also accepts disjoint complements.

    @brief Symmetric compatibility test.
    @param u First partition
    @param v Second partition, distinct from u
    @param mode "paper" or "classical"
    """
    if u == v:
        raise SamePartitionError(
            "compatibility is only defined for distinct partitions", {"partition": str(u)}
        )
    if u.n != v.n:
        raise InvalidPartitionError("partitions have different ground sets", {"n": (u.n, v.n)})
    if mode not in COMPAT_MODES:
        raise InvalidPartitionError("unknown compatibility mode", {"mode": mode})
    nested = u.a < v.a or u.a_bar < v.a_bar
    if mode == "classical":
        return nested or not (u.a_bar & v.a_bar)
    return nested


def is_nested(partitions: Iterable[TwoBlockPartition]) -> bool:
    """True when the 1-blocks form a chain under strict inclusion."""
    blocks = sorted((p.a for p in partitions), key=len)
    return all(x < y for x, y in zip(blocks, blocks[1:]))


def is_compatible_set(partitions: Iterable[TwoBlockPartition], mode: str = "paper") -> bool:
    items = list(partitions)
    if len(set(items)) != len(items):
        return False
    return all(is_compatible(u, v, mode) for u, v in combinations(items, 2))


def splits(v: TwoBlockPartition, labels: Iterable[int]) -> bool:
    """
    True when the label set meets both blocks.

    @brief {a, a_bar} splits S iff S is in neither block.
    """
    s = frozenset(labels)
    return not s <= v.a and not s <= v.a_bar


@lru_cache(maxsize=64)
def all_partitions(n: int) -> tuple[TwoBlockPartition, ...]:
    """
    Every two-block partition of {1..n} with both blocks of size at least two.

    @brief Sorted by 1-block size, then lexicographically.
    """
    others = range(2, n + 1)
    result = []
    for extra in range(1, n - 2):
        for chosen in combinations(others, extra):
            result.append(TwoBlockPartition(n, frozenset((1, *chosen))))
    return tuple(result)
