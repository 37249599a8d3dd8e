"""
Verification Runner for MorseLab

Runs registered lemma checks over their instances, sequentially or in a
process pool, and returns reports in instance order.
"""

import logging
from collections.abc import Hashable
from concurrent.futures import ProcessPoolExecutor

from ..config.run_config import RunConfig
from ..logging.logger_manager import LoggerManager
from . import lemmas  # noqa: F401  registers the lemma checks
from .lemma_registry import get_lemma, lemma_registry
from .report import VerificationReport

logger = logging.getLogger(__name__)


def _run_task(task: tuple[str, RunConfig, Hashable]) -> VerificationReport:
    """Worker entry point: check one instance of one lemma."""
    lemma_id, config, instance = task
    return get_lemma(lemma_id)(config).run_instance(instance)


class VerificationRunner:
    """
    Runs lemma checks.

    With workers > 1 the instances are farmed out to a ProcessPoolExecutor;
    results are merged back in submission order, so the report stream does not
    depend on the worker count.
    """

    def __init__(
        self, config: RunConfig | None = None, logger_manager: LoggerManager | None = None
    ):
        """
        Initialize the runner.

        @brief Bind the runner to a run configuration.
        @param config Run configuration (defaults when None)
        @param logger_manager Logger manager for verdict logging (optional)
        """
        self.config = config or RunConfig()
        self.logger_manager = logger_manager

    def tasks(self, lemma_ids: list[str]) -> list[tuple[str, RunConfig, Hashable]]:
        """
        Expand lemma ids into (lemma, config, instance) tasks.

        @brief Deterministic task list.
        """
        tasks = []
        for lemma_id in lemma_ids:
            check = get_lemma(lemma_id)(self.config)
            tasks.extend((lemma_id, self.config, instance) for instance in check.instances())
        return tasks

    def run(self, lemma_id: str) -> list[VerificationReport]:
        """
        Verify one lemma, or every lemma for "all".

        @brief Run checks and collect reports.
        @param lemma_id Registered lemma id or "all"
        @return Reports in task order
        @throws UnknownLemmaError If the id is not registered
        """
        lemma_ids = lemma_registry.resolve(lemma_id)
        tasks = self.tasks(lemma_ids)
        logger.info(
            "verification started",
            extra={"operation": "verify", "instance": lemma_id, "size": len(tasks)},
        )
        if self.config.workers > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=self.config.workers) as executor:
                reports = list(executor.map(_run_task, tasks))
        else:
            reports = [_run_task(task) for task in tasks]
        for report in reports:
            self._log(report)
        return reports

    def _log(self, report: VerificationReport) -> None:
        if self.logger_manager is not None:
            self.logger_manager.log_verification(
                report.lemma_id,
                report.instance,
                report.verdict.value,
                report.classification,
                report.duration,
            )
        else:
            logger.debug(
                f"{report.lemma_id} {report.verdict.value}",
                extra={"operation": "verify", "instance": report.instance},
            )


def verify_lemma(lemma_id: str, config: RunConfig | None = None) -> list[VerificationReport]:
    """
    Verify a lemma with a throwaway runner.

    @brief Convenience function to run one lemma.
    """
    return VerificationRunner(config).run(lemma_id)
