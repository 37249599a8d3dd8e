"""
Lemma Check Base Class for MorseLab

Each registered lemma enumerates its instances from the run configuration and
checks one instance at a time, returning a VerificationReport.
"""

import time
from abc import ABC, abstractmethod
from collections.abc import Hashable
from typing import Any

from ..config.run_config import RunConfig
from ..exceptions import BoundExceededError
from ..graph.basepointed_graph import BasepointedGraph
from ..graph.canonical import instance_key
from ..topology.homology import HomologyProfile
from .enumeration import enumerate_instances
from .report import Verdict, VerificationReport


class LemmaCheck(ABC):
    """
    Base class for lemma checks.

    Subclasses set lemma_id, description and expected, and implement
    instances() and check(). run_instance() adds timing and turns cap
    overruns into INCONCLUSIVE reports.
    """

    lemma_id: str = ""
    description: str = ""
    expected: str = ""

    def __init__(self, config: RunConfig | None = None):
        """
        Initialize the check.

        @brief Bind the check to a run configuration.
        @param config Run configuration (defaults when None)
        """
        self.config = config or RunConfig()

    @abstractmethod
    def instances(self) -> list[Hashable]:
        """
        Instances to check, in a deterministic order.

        @brief Enumerate instances within the configured bounds.
        @return Picklable instance values
        """

    @abstractmethod
    def check(self, instance: Hashable) -> VerificationReport:
        """
        Check one instance.

        @brief Run the lemma on one instance.
        @param instance Value from instances()
        @return Report with verdict and computed profile
        """

    def describe_instance(self, instance: Hashable) -> str:
        return str(instance)

    def reproducer(self, instance: Hashable) -> dict:
        return {"instance": self.describe_instance(instance)}

    def run_instance(self, instance: Hashable) -> VerificationReport:
        """
        Check one instance with timing.

        @brief Timed check; cap overruns are INCONCLUSIVE, failures carry a reproducer.
        """
        started = time.perf_counter()
        try:
            report = self.check(instance)
        except BoundExceededError as e:
            report = self.inconclusive(instance, str(e))
        if report.failed and report.reproducer is None:
            report.reproducer = self.reproducer(instance)
        report.duration = time.perf_counter() - started
        return report

    def report(self, instance: Hashable, verdict: Verdict, **kwargs: Any) -> VerificationReport:
        kwargs.setdefault("expected", self.expected)
        return VerificationReport(
            lemma_id=self.lemma_id,
            instance=self.describe_instance(instance),
            verdict=verdict,
            **kwargs,
        )

    def profile_report(
        self, instance: Hashable, profile: HomologyProfile, holds: bool, **kwargs: Any
    ) -> VerificationReport:
        """PASS or FAIL with the classification read from the profile."""
        kwargs.setdefault("expected", self.expected)
        return VerificationReport.from_profile(
            self.lemma_id, self.describe_instance(instance), profile=profile, holds=holds, **kwargs
        )

    def inconclusive(self, instance: Hashable, note: str) -> VerificationReport:
        return self.report(instance, Verdict.INCONCLUSIVE, notes=[note])


class GraphLemmaCheck(LemmaCheck):
    """
    Lemma checked on every enumerated graph.

    rank_limit and vertex_limit narrow the configured bounds for checks that
    are only meaningful, or only affordable, on smaller graphs.
    """

    rank_limit: int | None = None
    vertex_limit: int | None = None

    def applies_to(self, g: BasepointedGraph) -> bool:
        return True

    def instances(self) -> list[Hashable]:
        max_rank = self.config.max_rank
        max_vertices = self.config.max_vertices
        if self.rank_limit is not None:
            max_rank = min(max_rank, self.rank_limit)
        if self.vertex_limit is not None:
            max_vertices = min(max_vertices, self.vertex_limit)
        graphs = enumerate_instances(
            max_rank, max_vertices, self.config.min_basepoint_degree, self.config.min_rank
        )
        return [g for g in graphs if self.applies_to(g)]

    def describe_instance(self, instance: Hashable) -> str:
        return instance_key(instance)

    def reproducer(self, instance: Hashable) -> dict:
        return {"graph": instance.to_dict()}


class SigmaLemmaCheck(LemmaCheck):
    """Lemma checked on partition complexes with 4 <= n <= sigma_max_n."""

    def sizes(self) -> range:
        return range(4, self.config.sigma_max_n + 1)
