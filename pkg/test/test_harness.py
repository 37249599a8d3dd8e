"""
Test cases for the verification harness

Tests graph enumeration, down-links, up-links and descending links, the lemma
registry, individual lemma checks, reports and the runner.
"""

import json
import sys
import unittest
from pathlib import Path

# Add the parent directory to the path to import the module
sys.path.insert(0, str(Path(__file__).parent.parent))

from morselab.config.run_config import RunConfig  # noqa: E402
from morselab.exceptions import (  # noqa: E402
    BoundExceededError,
    UnknownLemmaError,
    VerificationError,
)
from morselab.graph import (  # noqa: E402
    BasepointedGraph,
    GraphBlowUp,
    g3,
    g4,
    instance_key,
    rose,
    square,
    tall,
    theta,
    unique_descending,
)
from morselab.harness import (  # noqa: E402
    ALL_LEMMAS,
    GraphLemmaCheck,
    LemmaRegistry,
    UpLinkCaps,
    Verdict,
    VerificationReport,
    VerificationRunner,
    caps_truncate,
    descending_link,
    descending_link_profile,
    down_link,
    enumerate_graphs,
    enumerate_instances,
    farthest_edge_link_check,
    farthest_edges,
    farthest_vertical_edge,
    format_table,
    get_lemma,
    graph_blow_ups,
    has_failures,
    in_up_link,
    list_lemmas,
    summarize,
    to_json_lines,
    up_link_complex,
    up_link_model,
    verify_lemma,
)
from morselab.partitions import TwoBlockPartition  # noqa: E402
from morselab.topology import classify, reduced_homology  # noqa: E402


def _degree_six() -> BasepointedGraph:
    """Two p-v edges and two loops at v."""
    return BasepointedGraph(2, [(0, 1), (0, 1), (1, 1), (1, 1)], 0)


GRAPH_LEMMAS = (
    "forest-height",
    "blowup-height",
    "down-link",
    "down-link-unique",
    "down-link-induction",
    "sbu-spherical",
    "up-link-model",
    "up-link",
    "descending-link",
)


class TestEnumeration(unittest.TestCase):
    """
    Test cases for graph enumeration.

    @brief Isomorphism class counts and bounds.
    """

    def test_rank_one(self):
        keys = [instance_key(g) for g in enumerate_graphs(1, 2)]
        self.assertEqual(keys, [instance_key(rose(1)), instance_key(unique_descending())])

    def test_rank_two_counts(self):
        self.assertEqual(len(list(enumerate_graphs(2, 1))), 1)
        self.assertEqual(len(list(enumerate_graphs(2, 2))), 5)

    def test_representatives_are_distinct_classes(self):
        keys = [instance_key(g) for g in enumerate_graphs(2, 3)]
        self.assertEqual(len(keys), len(set(keys)))
        self.assertIn(instance_key(theta()), keys)
        self.assertIn(instance_key(g3()), keys)

    def test_bounds(self):
        for rank, vertices in ((0, 2), (6, 2), (2, 0), (2, 7)):
            with self.subTest(rank=rank, vertices=vertices):
                with self.assertRaises(BoundExceededError):
                    list(enumerate_graphs(rank, vertices))

    def test_enumerate_instances(self):
        graphs = enumerate_instances(2, 2)
        self.assertEqual(len(graphs), 7)
        self.assertEqual(len(enumerate_instances(2, 2, min_rank=2)), 5)

    def test_basepoint_degree(self):
        graphs = enumerate_instances(2, 2, min_basepoint_degree=2)
        self.assertTrue(all(g.degree(g.basepoint) >= 2 for g in graphs))


class TestDownLink(unittest.TestCase):
    """
    Test cases for down-links.

    @brief Order complexes of descending forests.
    """

    def test_values(self):
        expected = {
            "theta": (theta(), "Wedge(0,2)"),
            "g4": (g4(), "Wedge(0,1)"),
            "g3": (g3(), "AcyclicPoint"),
            "unique_descending": (unique_descending(), "AcyclicPoint"),
            "r2": (rose(2), "Void"),
        }
        for name, (g, classification) in expected.items():
            with self.subTest(graph=name):
                self.assertEqual(str(classify(down_link(g))), classification)

    def test_labels_are_forests(self):
        x = down_link(g4())
        self.assertEqual([str(x.label(v)) for v in x.vertices()], ["{e0}", "{e1}"])

    def test_farthest_vertical_edge(self):
        self.assertIsNone(farthest_vertical_edge(rose(2)))
        self.assertEqual(farthest_vertical_edge(g3()), 1)
        self.assertEqual(farthest_vertical_edge(theta()), 0)

    def test_farthest_edge_link_check(self):
        """
        Test the induction comparison on G3.

        @brief The link of {e1} maps bijectively onto the down-link of G3/e1.
        """
        result = farthest_edge_link_check(g3())
        self.assertEqual(result.edge, 1)
        self.assertTrue(result.bijective)
        self.assertTrue(result.homology_agrees)
        self.assertEqual(result.quotient.vertex_count, 2)
        self.assertIsNone(farthest_edge_link_check(rose(2)))

    def test_horizontal_farthest_edge_is_vacuous(self):
        """
        Test graphs whose farthest edges include a horizontal one.

        @brief No comparison is made and the induction check passes.
        """
        complete = BasepointedGraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], 0)
        self.assertEqual(farthest_edges(complete), (0, 1, 2, 3, 4, 5))
        self.assertEqual(farthest_edges(square()), (0, 1, 2, 3))
        check = get_lemma("down-link-induction")()
        for g in (
            complete,
            BasepointedGraph(4, [(0, 1), (0, 2), (0, 3), (1, 1), (2, 3), (2, 3)], 0),
            square(),
        ):
            with self.subTest(graph=instance_key(g)):
                self.assertIsNone(farthest_vertical_edge(g))
                self.assertIsNone(farthest_edge_link_check(g))
                report = check.run_instance(g)
                self.assertIs(report.verdict, Verdict.PASS)
                self.assertIn("horizontal", report.notes[0])


class TestUpLink(unittest.TestCase):
    """
    Test cases for up-links.

    @brief The model join, explicit blow-up posets and their caps.
    """

    def test_model(self):
        self.assertTrue(up_link_model(theta()).is_void)
        model = up_link_model(g4())
        self.assertEqual(str(classify(model)), "Wedge(0,1)")
        self.assertEqual(model.label(0), (1, TwoBlockPartition.parse("1,3|2,4")))

    def test_graph_blow_ups(self):
        self.assertEqual(len(graph_blow_ups(g4())), 3)
        self.assertEqual(graph_blow_ups(theta()), ())

    def test_caps(self):
        with self.assertRaises(BoundExceededError):
            graph_blow_ups(g4(), caps=UpLinkCaps(max_poset_elements=2))
        with self.assertRaises(BoundExceededError):
            graph_blow_ups(g4(), caps=UpLinkCaps(max_blowup_degree=3))
        small_cap = UpLinkCaps(max_blowup_degree=3)
        skipped = graph_blow_ups(g4(), caps=small_cap, skip_large_vertices=True)
        self.assertEqual(skipped, ())

    def test_caps_truncate(self):
        self.assertFalse(caps_truncate(g4(), UpLinkCaps()))
        self.assertTrue(caps_truncate(_degree_six(), UpLinkCaps()))

    def test_variants_agree_with_model_on_g4(self):
        model = reduced_homology(up_link_model(g4()))
        for variant in ("strict", "weak", "x", "height"):
            with self.subTest(variant=variant):
                self.assertEqual(reduced_homology(up_link_complex(g4(), variant)), model)

    def test_membership(self):
        separating = GraphBlowUp.of({1: [TwoBlockPartition.parse("1,3|2,4")]})
        other = GraphBlowUp.of({1: [TwoBlockPartition.parse("1,2|3,4")]})
        self.assertTrue(in_up_link(g4(), separating))
        self.assertFalse(in_up_link(g4(), other))
        self.assertFalse(in_up_link(g4(), other, "height"))
        with self.assertRaises(VerificationError):
            in_up_link(g4(), separating, "loose")

    def test_descending_link(self):
        """
        Test the descending link of theta.

        @brief The up-link model is void, so the link is the down-link.
        """
        self.assertEqual(str(classify(descending_link(theta()))), "Wedge(0,2)")
        profile, explicit = descending_link_profile(theta())
        self.assertTrue(explicit)
        self.assertEqual(profile, reduced_homology(down_link(theta())))

    def test_descending_link_join_formula(self):
        explicit, _ = descending_link_profile(g4())
        formula, built = descending_link_profile(g4(), max_join_simplices=1)
        self.assertFalse(built)
        self.assertEqual(formula, explicit)
        self.assertEqual(str(classify(descending_link(g4()))), "Wedge(1,1)")


class TestLemmaRegistry(unittest.TestCase):
    """Test cases for LemmaRegistry and the registered checks"""

    def test_registered_ids(self):
        self.assertEqual(
            list_lemmas(),
            [
                "forest-height",
                "blowup-height",
                "down-link",
                "down-link-unique",
                "down-link-induction",
                "sigma-spherical",
                "sigma-base",
                "sigma-filtration",
                "relative-link",
                "sbu-spherical",
                "up-link-model",
                "up-link",
                "descending-link",
            ],
        )

    def test_registry_operations(self):
        registry = LemmaRegistry()
        registry.register("demo", get_lemma("down-link"))
        self.assertTrue(registry.is_registered("demo"))
        self.assertEqual(registry.resolve(ALL_LEMMAS), ["demo"])
        with self.assertRaises(ValueError):
            registry.register("demo", get_lemma("down-link"))
        with self.assertRaises(ValueError):
            registry.register(ALL_LEMMAS, get_lemma("down-link"))
        registry.unregister("demo")
        self.assertEqual(registry.get_lemma_count(), 0)
        with self.assertRaises(UnknownLemmaError):
            registry.unregister("demo")

    def test_unknown_lemma(self):
        with self.assertRaises(UnknownLemmaError):
            get_lemma("nope")
        with self.assertRaises(UnknownLemmaError):
            verify_lemma("nope")


class TestLemmaChecks(unittest.TestCase):
    """
    Test cases for individual lemma checks.

    @brief Single instances with known verdicts.
    """

    def test_down_link_check(self):
        check = get_lemma("down-link")()
        for g in (theta(), g3(), g4()):
            with self.subTest(graph=instance_key(g)):
                self.assertIs(check.run_instance(g).verdict, Verdict.PASS)

    def test_down_link_unique_is_strong(self):
        report = get_lemma("down-link-unique")().run_instance(unique_descending())
        self.assertIs(report.verdict, Verdict.PASS_STRONG)
        self.assertEqual(report.classification, "AcyclicPoint")

    def test_forest_height_detects_literal_order(self):
        """
        Test the height order setting.

        @brief Under the literal order the tall graph has an ascending collapse.
        """
        relative = get_lemma("forest-height")(RunConfig()).run_instance(tall())
        literal = get_lemma("forest-height")(RunConfig(height_order="literal")).run_instance(
            tall()
        )
        self.assertIs(relative.verdict, Verdict.PASS)
        self.assertIs(literal.verdict, Verdict.FAIL)
        self.assertIn("graph", literal.reproducer)

    def test_sbu_spherical_weak_comparison(self):
        report = get_lemma("sbu-spherical")(RunConfig(sbu_mode="weak")).run_instance(g4())
        self.assertIs(report.verdict, Verdict.PASS)
        self.assertEqual(report.comparisons["v1"], "degree=4 d=2 Wedge(0,1) weak=Wedge(0,1)")
        strict = get_lemma("sbu-spherical")().run_instance(g4())
        self.assertEqual(strict.comparisons["v1"], "degree=4 d=2 Wedge(0,1)")

    def test_up_link_inconclusive_when_truncated(self):
        report = get_lemma("up-link")().run_instance(_degree_six())
        self.assertIs(report.verdict, Verdict.INCONCLUSIVE)

    def test_bound_overrun_is_inconclusive(self):
        class Overrun(GraphLemmaCheck):
            lemma_id = "overrun"

            def check(self, g):
                raise BoundExceededError("too large")

        report = Overrun().run_instance(theta())
        self.assertIs(report.verdict, Verdict.INCONCLUSIVE)
        self.assertEqual(report.notes, ["too large"])

    def test_up_link_instances_are_limited(self):
        check = get_lemma("up-link")(RunConfig(max_rank=3, max_vertices=4))
        self.assertTrue(all(g.rank <= 2 and g.vertex_count <= 3 for g in check.instances()))


class TestReports(unittest.TestCase):
    """
    Test cases for reports.

    @brief Serialization, summaries and tables.
    """

    def setUp(self):
        profile = reduced_homology(down_link(theta()))
        self.passed = VerificationReport.from_profile(
            "down-link", "V2:0-1,0-1,0-1", "spherical(0)", profile, True
        )
        self.passed.duration = 0.25
        self.failed = VerificationReport(
            "forest-height", "V2:0-1,0-1,1-1", "descending", Verdict.FAIL, notes=["forest {e0}"]
        )

    def test_to_dict(self):
        data = self.passed.to_dict()
        self.assertEqual(data["verdict"], "PASS")
        self.assertEqual(data["classification"], "Wedge(0,2)")
        self.assertEqual(data["homology"]["0"], {"rank": 2, "torsion": []})
        self.assertNotIn("duration", data)
        self.assertEqual(self.passed.to_dict(include_timing=True)["duration"], 0.25)

    def test_json_lines(self):
        text = to_json_lines([self.passed, self.failed])
        lines = text.splitlines()
        self.assertEqual(len(lines), 2)
        self.assertEqual(json.loads(lines[1])["notes"], ["forest {e0}"])
        self.assertEqual(text, to_json_lines([self.passed, self.failed]))

    def test_summary_and_failures(self):
        summaries = summarize([self.passed, self.failed])
        self.assertEqual([s.lemma_id for s in summaries], ["down-link", "forest-height"])
        self.assertEqual(summaries[1].failures, 1)
        self.assertEqual(summaries[0].total, 1)
        self.assertTrue(has_failures([self.passed, self.failed]))
        self.assertFalse(has_failures([self.passed]))

    def test_table(self):
        table = format_table([self.passed])
        self.assertTrue(table.startswith("LEMMA"))
        self.assertIn("Wedge(0,2)", table)
        self.assertIn("down-link: 1 instances (PASS=1)", table)


class TestVerificationRunner(unittest.TestCase):
    """
    Test cases for VerificationRunner.

    @brief Deterministic reports over small bounds.
    """

    def setUp(self):
        self.config = RunConfig(min_rank=2, max_rank=2, max_vertices=3, sigma_max_n=5)

    def test_sigma_lemmas_pass(self):
        runner = VerificationRunner(self.config)
        for lemma_id in ("sigma-spherical", "sigma-base", "sigma-filtration", "relative-link"):
            with self.subTest(lemma=lemma_id):
                reports = runner.run(lemma_id)
                self.assertTrue(reports)
                self.assertFalse(has_failures(reports))

    def test_sigma_spherical_instances(self):
        reports = VerificationRunner(self.config).run("sigma-spherical")
        self.assertEqual(len(reports), 18)
        self.assertEqual(reports[0].instance, "sigma:n=4,k=2")

    def test_forest_height_passes(self):
        reports = verify_lemma("forest-height", self.config)
        self.assertGreater(len(reports), 5)
        self.assertTrue(all(r.verdict is Verdict.PASS for r in reports))

    def test_reports_are_reproducible(self):
        first = to_json_lines(VerificationRunner(self.config).run("sigma-base"))
        second = to_json_lines(VerificationRunner(self.config).run("sigma-base"))
        self.assertEqual(first, second)

    def test_worker_pool_keeps_order(self):
        sequential = to_json_lines(VerificationRunner(self.config).run("sigma-spherical"))
        pooled_config = RunConfig(min_rank=2, max_rank=2, max_vertices=3, sigma_max_n=5, workers=2)
        pooled = to_json_lines(VerificationRunner(pooled_config).run("sigma-spherical"))
        self.assertEqual(pooled, sequential)

    def test_graph_lemmas_have_no_failures(self):
        """
        Test every graph lemma on rank-2 graphs with up to four vertices.

        @brief Up-link caps may leave instances INCONCLUSIVE but nothing fails.
        """
        config = RunConfig(min_rank=2, max_rank=2, max_vertices=4)
        runner = VerificationRunner(config)
        for lemma_id in GRAPH_LEMMAS:
            with self.subTest(lemma=lemma_id):
                reports = runner.run(lemma_id)
                self.assertTrue(reports)
                self.assertEqual([r.instance for r in reports if r.failed], [])

    def test_rank_three_slice(self):
        config = RunConfig(min_rank=3, max_rank=3, max_vertices=4)
        runner = VerificationRunner(config)
        for lemma_id in ("down-link-induction", "forest-height", "down-link"):
            with self.subTest(lemma=lemma_id):
                reports = runner.run(lemma_id)
                self.assertTrue(reports)
                self.assertEqual([r.instance for r in reports if r.failed], [])


if __name__ == "__main__":
    unittest.main()
