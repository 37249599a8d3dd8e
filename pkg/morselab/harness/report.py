"""
Verification reports.

One VerificationReport per (lemma, instance). Reports serialize to JSON lines
with sorted keys; timings are kept on the object and only written when asked,
so two identical runs produce identical output.
"""

import json
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from ..topology.homology import HomologyProfile, classify_profile


class Verdict(str, Enum):
    PASS = "PASS"
    PASS_STRONG = "PASS-STRONG"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class VerificationReport:
    """
    Outcome of one lemma check on one instance.

    @brief Verdict with the computed profile and a reproducer on failure.
    """

    lemma_id: str
    instance: str
    expected: str
    verdict: Verdict
    profile: HomologyProfile | None = None
    classification: str | None = None
    comparisons: dict[str, str] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    reproducer: dict[str, Any] | None = None
    duration: float = 0.0

    @classmethod
    def from_profile(
        cls,
        lemma_id: str,
        instance: str,
        expected: str,
        profile: HomologyProfile,
        holds: bool,
        **kwargs: Any,
    ) -> "VerificationReport":
        """
        Report whose classification is read from a profile.

        @brief PASS when holds, FAIL otherwise.
        """
        return cls(
            lemma_id=lemma_id,
            instance=instance,
            expected=expected,
            verdict=Verdict.PASS if holds else Verdict.FAIL,
            profile=profile,
            classification=str(classify_profile(profile)),
            **kwargs,
        )

    @property
    def failed(self) -> bool:
        return self.verdict is Verdict.FAIL

    def to_dict(self, include_timing: bool = False) -> dict[str, Any]:
        data: dict[str, Any] = {
            "lemma": self.lemma_id,
            "instance": self.instance,
            "expected": self.expected,
            "verdict": self.verdict.value,
            "classification": self.classification,
            "homology": self.profile.to_dict() if self.profile is not None else None,
        }
        if self.comparisons:
            data["comparisons"] = dict(self.comparisons)
        if self.notes:
            data["notes"] = list(self.notes)
        if self.reproducer is not None:
            data["reproducer"] = self.reproducer
        if include_timing:
            data["duration"] = round(self.duration, 6)
        return data

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), sort_keys=True)


def to_json_lines(reports: list[VerificationReport], include_timing: bool = False) -> str:
    """Reports as newline-terminated JSON lines."""
    return "".join(r.to_json(include_timing) + "\n" for r in reports)


@dataclass
class LemmaSummary:
    """
    Verdict counts for one lemma.

    @brief Per-lemma tally.
    """

    lemma_id: str
    counts: dict[str, int]
    duration: float = 0.0

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def failures(self) -> int:
        return self.counts.get(Verdict.FAIL.value, 0)

    def to_dict(self) -> dict[str, Any]:
        return {"lemma": self.lemma_id, "total": self.total, "counts": dict(self.counts)}


def summarize(reports: list[VerificationReport]) -> list[LemmaSummary]:
    """Tally verdicts per lemma, in first-appearance order."""
    order: list[str] = []
    tallies: dict[str, Counter] = {}
    durations: dict[str, float] = {}
    for r in reports:
        if r.lemma_id not in tallies:
            order.append(r.lemma_id)
            tallies[r.lemma_id] = Counter()
            durations[r.lemma_id] = 0.0
        tallies[r.lemma_id][r.verdict.value] += 1
        durations[r.lemma_id] += r.duration
    return [
        LemmaSummary(lemma, {v.value: tallies[lemma][v.value] for v in Verdict}, durations[lemma])
        for lemma in order
    ]


def format_table(reports: list[VerificationReport]) -> str:
    """
    Fixed-width table of reports followed by per-lemma totals.

    @brief Human-readable verification table.
    """
    header = f"{'LEMMA':<22} {'VERDICT':<13} {'CLASSIFICATION':<16} INSTANCE"
    lines = [header, "-" * len(header)]
    for r in reports:
        lines.append(
            f"{r.lemma_id:<22} {r.verdict.value:<13} {r.classification or '-':<16} {r.instance}"
        )
    lines.append("")
    for s in summarize(reports):
        counts = ", ".join(f"{k}={v}" for k, v in s.counts.items() if v)
        lines.append(f"{s.lemma_id}: {s.total} instances ({counts})")
    return "\n".join(lines) + "\n"


def has_failures(reports: list[VerificationReport]) -> bool:
    return any(r.failed for r in reports)
