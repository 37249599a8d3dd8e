"""
Test cases for two-block partitions and blow-up posets

Tests normalization, parsing, compatibility in both modes and the per-vertex
blow-up posets BU and SBU.
"""

import sys
import unittest
from pathlib import Path

# Add the parent directory to the path to import the module
sys.path.insert(0, str(Path(__file__).parent.parent))

from morselab.exceptions import InvalidPartitionError, SamePartitionError  # noqa: E402
from morselab.graph import BasepointedGraph, g4, theta  # noqa: E402
from morselab.partitions import (  # noqa: E402
    TwoBlockPartition,
    all_partitions,
    bu_poset,
    compatible_sets,
    is_compatible,
    is_compatible_set,
    is_nested,
    is_strictly_separating,
    is_weakly_separating,
    sbu_complex,
    splits,
    weak_sbu_complex,
    weak_sbu_poset,
)
from morselab.topology import classify  # noqa: E402


def _p(text: str) -> TwoBlockPartition:
    return TwoBlockPartition.parse(text)


class TestTwoBlockPartition(unittest.TestCase):
    """
    Test cases for TwoBlockPartition.

    @brief Normalization and the display form.
    """

    def test_normalized_to_block_with_one(self):
        p = TwoBlockPartition.of(4, [2, 4])
        self.assertEqual(p.a, frozenset({1, 3}))
        self.assertEqual(p.a_bar, frozenset({2, 4}))
        self.assertEqual(p, _p("2,4|1,3"))
        self.assertEqual(str(p), "(1, 3 | 2, 4)")

    def test_size(self):
        self.assertEqual(_p("1,2|3,4,5").size, 3)
        self.assertEqual(_p("(1, 2, 3 | 4, 5)").size, 2)

    def test_small_blocks_rejected(self):
        with self.assertRaises(InvalidPartitionError):
            TwoBlockPartition.of(4, [1])
        with self.assertRaises(InvalidPartitionError):
            TwoBlockPartition.of(4, [1, 5])

    def test_parse_errors(self):
        for text in ("1,3,2,4", "1,2|2,3", "1,x|2,3", "1,2|3,5"):
            with self.subTest(text=text):
                with self.assertRaises(InvalidPartitionError):
                    _p(text)
        with self.assertRaises(InvalidPartitionError):
            TwoBlockPartition.parse("1,3|2,4", n=5)

    def test_all_partitions(self):
        self.assertEqual(len(all_partitions(4)), 3)
        self.assertEqual(len(all_partitions(5)), 10)
        self.assertEqual(all_partitions(4)[0], _p("1,2|3,4"))
        self.assertEqual(all_partitions(3), ())

    def test_splits(self):
        self.assertTrue(splits(_p("1,3|2,4"), {1, 2}))
        self.assertFalse(splits(_p("1,2|3,4"), {1, 2}))
        self.assertFalse(splits(_p("1,2|3,4"), {3, 4}))


class TestCompatibility(unittest.TestCase):
    """
    Test cases for is_compatible.

    @brief Nested 1-blocks, with disjoint complements accepted in classical mode.
    """

    def test_nested_blocks(self):
        self.assertTrue(is_compatible(_p("1,2|3,4,5"), _p("1,2,3|4,5")))
        self.assertTrue(is_compatible(_p("1,2,3|4,5"), _p("1,2|3,4,5")))

    def test_crossing_blocks(self):
        for mode in ("paper", "classical"):
            with self.subTest(mode=mode):
                self.assertFalse(is_compatible(_p("1,2|3,4,5"), _p("1,3|2,4,5"), mode))

    def test_disjoint_complements(self):
        u, v = _p("1,2,3,4|5,6"), _p("1,5,6|2,3,4")
        self.assertFalse(is_compatible(u, v))
        self.assertTrue(is_compatible(u, v, "classical"))

    def test_same_partition(self):
        with self.assertRaises(SamePartitionError):
            is_compatible(_p("1,2|3,4"), _p("1,2|3,4"))

    def test_ground_set_and_mode_checked(self):
        with self.assertRaises(InvalidPartitionError):
            is_compatible(_p("1,2|3,4"), _p("1,2|3,4,5"))
        with self.assertRaises(InvalidPartitionError):
            is_compatible(_p("1,2|3,4,5"), _p("1,2,3|4,5"), "loose")

    def test_sets(self):
        chain = [_p("1,2|3,4,5,6"), _p("1,2,3|4,5,6"), _p("1,2,3,4|5,6")]
        self.assertTrue(is_compatible_set(chain))
        self.assertTrue(is_nested(chain))
        self.assertFalse(is_compatible_set(chain + [_p("1,5|2,3,4,6")]))
        self.assertFalse(is_nested([_p("1,2|3,4,5"), _p("1,3|2,4,5")]))


class TestBlowUpPosets(unittest.TestCase):
    """
    Test cases for BU and SBU at a vertex.

    @brief Poset sizes and the homotopy type of separating blow-ups.
    """

    def setUp(self):
        self.degree_five = BasepointedGraph(2, [(0, 1), (0, 1), (0, 1), (1, 1)], 0)

    def test_compatible_sets(self):
        self.assertEqual(compatible_sets(3), ())
        self.assertEqual(len(compatible_sets(4)), 3)
        self.assertEqual(len(compatible_sets(5)), 22)
        self.assertEqual(len(compatible_sets(5, max_size=1)), 10)
        self.assertEqual(len(compatible_sets(5, "classical")), 25)

    def test_bu_poset(self):
        poset = bu_poset(self.degree_five, 1)
        self.assertEqual(len(poset), 22)
        self.assertEqual(len(poset.minimal_elements()), 10)
        self.assertEqual(len(bu_poset(g4(), 1)), 3)

    def test_sbu_complex(self):
        """
        Test separating blow-ups as partition complexes.

        @brief Void at degree three, S0 for G4, a wedge of two circles at degree five.
        """
        self.assertTrue(sbu_complex(theta(), 1).is_void)
        self.assertEqual(str(classify(sbu_complex(g4(), 1))), "Wedge(0,1)")
        self.assertEqual(str(classify(sbu_complex(self.degree_five, 1))), "Wedge(1,2)")

    def test_weak_sbu_poset(self):
        self.assertEqual(len(weak_sbu_poset(g4(), 1)), 2)
        self.assertEqual(len(weak_sbu_poset(self.degree_five, 1)), 21)
        weak = weak_sbu_complex(g4(), 1)
        self.assertEqual(weak.vertex_count, 2)
        self.assertEqual(str(classify(weak)), "Wedge(0,1)")

    def test_separating_predicates(self):
        down = frozenset({1, 2, 3})
        mixed = frozenset({_p("1,2|3,4,5"), _p("1,2,3|4,5")})
        self.assertFalse(is_strictly_separating(mixed, down))
        self.assertTrue(is_weakly_separating(mixed, down))
        self.assertTrue(is_strictly_separating(frozenset({_p("1,2|3,4,5")}), down))


if __name__ == "__main__":
    unittest.main()
