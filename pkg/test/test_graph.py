"""
Test cases for basepointed graphs

Tests construction and validation, levels, half-edge labels, canonical forms,
the graph file format and the named catalogue.
"""

import json
import os
import sys
import tempfile
import unittest
from pathlib import Path

# Add the parent directory to the path to import the module
sys.path.insert(0, str(Path(__file__).parent.parent))

from morselab.exceptions import GraphFormatError, InvalidGraphError  # noqa: E402
from morselab.graph import (  # noqa: E402
    CATALOG,
    BasepointedGraph,
    are_isomorphic,
    canonical_form,
    canonical_key,
    catalog_graph,
    g3,
    g4,
    graph_from_dict,
    instance_key,
    load_graph,
    rose,
    save_graph,
    theta,
    unique_descending,
)


class TestBasepointedGraph(unittest.TestCase):
    """
    Test cases for BasepointedGraph.

    @brief Validation, levels and half-edge bookkeeping.
    """

    def test_rank_and_counts(self):
        g = g3()
        self.assertEqual(g.vertex_count, 3)
        self.assertEqual(g.edge_count, 4)
        self.assertEqual(g.rank, 2)
        self.assertEqual(g.total_degree, 8)
        self.assertEqual([g.degree(v) for v in g.vertices()], [1, 3, 4])

    def test_level_maps(self):
        """
        Test levels as edge-count distance from the basepoint.

        @brief Catalogue examples.
        """
        self.assertEqual(rose(2).level_map(), {0: 0})
        self.assertEqual(theta().level_map(), {0: 0, 1: 1})
        self.assertEqual(g3().level_map(), {0: 0, 1: 1, 2: 2})
        self.assertEqual(g3().max_level, 2)
        self.assertEqual(g3().vertices_at_level(2), (2,))

    def test_every_vertex_has_a_descending_half_edge(self):
        for name in CATALOG:
            g = catalog_graph(name)
            for v in g.non_basepoint_vertices():
                with self.subTest(graph=name, vertex=v):
                    self.assertGreaterEqual(g.descending_count(v), 1)

    def test_descending_labels_come_first(self):
        """
        Test half-edge labels at a vertex.

        @brief In G4 the two p-v halves are labels 1, 2 and the loop is 3, 4.
        """
        g = g4()
        halves = g.half_edges_at(1)
        self.assertEqual([g.half_edge_label(h) for h in halves], [1, 2, 3, 4])
        self.assertEqual([BasepointedGraph.edge_of(h) for h in halves], [0, 1, 2, 2])
        self.assertEqual(g.descending_labels(1), frozenset({1, 2}))

    def test_half_edge_ids(self):
        g = theta()
        self.assertEqual(g.owner(0), 0)
        self.assertEqual(g.owner(1), 1)
        self.assertEqual(BasepointedGraph.partner(4), 5)
        self.assertEqual(g.endpoints(2), (0, 1))

    def test_low_degree_vertex_rejected(self):
        with self.assertRaises(InvalidGraphError):
            BasepointedGraph(2, [(0, 1), (0, 1)])

    def test_disconnected_rejected(self):
        with self.assertRaises(InvalidGraphError):
            BasepointedGraph(2, [(0, 0), (1, 1), (1, 1)])

    def test_endpoint_out_of_range(self):
        with self.assertRaises(InvalidGraphError):
            BasepointedGraph(2, [(0, 1), (0, 2), (1, 1)])

    def test_rank_mismatch(self):
        with self.assertRaises(InvalidGraphError) as ctx:
            BasepointedGraph(2, [(0, 1), (0, 1), (0, 1)], rank=3)
        self.assertEqual(ctx.exception.details, {"expected": 3, "actual": 2})

    def test_basepoint_degree_flag(self):
        """
        Test the basepoint valence setting.

        @brief Degree-one basepoints are accepted by default only.
        """
        edges = [(0, 1), (1, 1)]
        self.assertEqual(BasepointedGraph(2, edges).degree(0), 1)
        with self.assertRaises(InvalidGraphError):
            BasepointedGraph(2, edges, min_basepoint_degree=2)

    def test_without_edge(self):
        g = theta().without_edge(0)
        self.assertEqual(g.edges, ((0, 1), (0, 1)))
        with self.assertRaises(InvalidGraphError):
            unique_descending().without_edge(0)

    def test_equality_and_hash(self):
        self.assertEqual(theta(), theta())
        self.assertEqual(len({theta(), theta(), g4()}), 2)
        self.assertNotEqual(theta(), g4())


class TestCanonicalForm(unittest.TestCase):
    """
    Test cases for canonical forms.

    @brief Basepoint-preserving isomorphism classes.
    """

    def test_relabelled_graph_is_isomorphic(self):
        relabelled = BasepointedGraph(3, [(0, 2), (2, 1), (1, 2), (1, 1)], 0)
        self.assertTrue(are_isomorphic(relabelled, g3()))
        self.assertEqual(canonical_key(relabelled), canonical_key(g3()))

    def test_basepoint_matters(self):
        """The same multigraph with a different basepoint is another class"""
        edges = [(0, 1), (0, 1), (0, 1), (1, 1)]
        at_p, at_v = BasepointedGraph(2, edges, 0), BasepointedGraph(2, edges, 1)
        self.assertFalse(are_isomorphic(at_p, at_v))

    def test_canonical_form_has_basepoint_zero(self):
        g = canonical_form(BasepointedGraph(2, [(1, 0), (1, 0), (0, 0)], 1))
        self.assertEqual(g.basepoint, 0)
        self.assertTrue(are_isomorphic(g, g4()))

    def test_instance_key(self):
        self.assertEqual(instance_key(theta()), "V2:0-1,0-1,0-1")
        self.assertEqual(instance_key(rose(2)), "V1:0-0,0-0")


class TestGraphIO(unittest.TestCase):
    """
    Test cases for the graph file format.

    @brief JSON documents with rank, basepoint, vertexCount and edges.
    """

    def test_save_and_load(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "g3.json")
            save_graph(g3(), path)
            with open(path, encoding="utf-8") as f:
                document = json.load(f)
            loaded = load_graph(path)
        self.assertEqual(
            document,
            {
                "basepoint": 0,
                "edges": [[0, 1], [1, 2], [1, 2], [2, 2]],
                "rank": 2,
                "vertexCount": 3,
            },
        )
        self.assertEqual(loaded, g3())

    def test_rank_is_optional(self):
        g = graph_from_dict({"vertexCount": 2, "edges": [[0, 1], [0, 1], [0, 1]]})
        self.assertEqual(g, theta())

    def test_malformed_document(self):
        with self.assertRaises(GraphFormatError):
            graph_from_dict({"edges": [[0, 0]]})
        with self.assertRaises(GraphFormatError):
            graph_from_dict({"vertexCount": 1, "edges": [[0]]})

    def test_rank_checked_on_load(self):
        with self.assertRaises(InvalidGraphError):
            graph_from_dict({"rank": 5, "vertexCount": 1, "edges": [[0, 0]]})

    def test_bad_files(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "bad.json")
            with open(path, "w", encoding="utf-8") as f:
                f.write("[1, 2")
            with self.assertRaises(GraphFormatError):
                load_graph(path)
            with open(path, "w", encoding="utf-8") as f:
                f.write("[1, 2]")
            with self.assertRaises(GraphFormatError):
                load_graph(path)
            with self.assertRaises(GraphFormatError):
                load_graph(os.path.join(tmp, "missing.json"))


class TestCatalog(unittest.TestCase):
    """Test cases for the named graphs"""

    def test_catalog_graphs_are_valid(self):
        for name in CATALOG:
            with self.subTest(graph=name):
                self.assertEqual(catalog_graph(name).basepoint, 0)

    def test_rose_names(self):
        self.assertEqual(catalog_graph("rose4"), rose(4))
        self.assertEqual(catalog_graph("THETA"), theta())

    def test_unknown_name(self):
        with self.assertRaises(GraphFormatError):
            catalog_graph("petersen")


if __name__ == "__main__":
    unittest.main()
