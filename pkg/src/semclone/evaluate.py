"""Score reported clone sets against ground truth.

Two protocols:

* method1 flattens both sides into one set of unique file names and
  computes precision/recall on the flattened sets.
* method2 keeps the sets intact: each reported set is matched to the
  actual set that maximizes F1 (ties broken by higher precision, then
  lower actual-set index) and the per-set precisions and recalls are
  averaged.

Undefined ratios (empty denominators) are reported as 0.0 with an explicit
flag rather than omitted, so reports stay machine-comparable.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from semclone.errors import InputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroundTruth:
    clone_sets: tuple[frozenset[str], ...]

    def unresolved(self, known_file_ids: frozenset[str]) -> list[str]:
        """Member ids that do not resolve against a corpus; for warnings."""
        return sorted(
            {m for cs in self.clone_sets for m in cs if m not in known_file_ids}
        )


@dataclass(frozen=True)
class SetMatch:
    reported: tuple[str, ...]
    actual_index: int | None
    actual: tuple[str, ...] | None
    precision: float
    recall: float


@dataclass(frozen=True)
class EvalReport:
    method: str  # "m1" | "m2"
    precision: float
    recall: float
    reported_count: int
    precision_defined: bool
    recall_defined: bool
    per_set_detail: tuple[SetMatch, ...] | None = None


def load_ground_truth(path: str | Path) -> GroundTruth:
    """Ground truth is a JSON list of member lists; singleton sets and
    duplicate members within a set are rejected."""
    path = Path(path)
    if not path.is_file():
        raise InputError(f"ground truth file not found: {path}")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from None
    if not isinstance(data, list):
        raise InputError(f"{path}: expected a JSON list of clone sets")
    clone_sets: list[frozenset[str]] = []
    for i, members in enumerate(data):
        if not isinstance(members, list) or not all(isinstance(m, str) for m in members):
            raise InputError(f"{path}: clone set {i} must be a list of strings")
        if len(members) != len(set(members)):
            raise InputError(f"{path}: clone set {i} has duplicate members")
        if len(members) < 2:
            raise InputError(f"{path}: clone set {i} is a singleton")
        clone_sets.append(frozenset(members))
    if not clone_sets:
        logger.warning("%s: ground truth is empty", path)
    return GroundTruth(clone_sets=tuple(clone_sets))


def method1(
    reported: Sequence[frozenset[str]], actual: Sequence[frozenset[str]]
) -> EvalReport:
    """Flattened-union protocol: unify each side into one set of unique
    file names before scoring."""
    flat_reported: frozenset[str] = frozenset().union(*reported) if reported else frozenset()
    flat_actual: frozenset[str] = frozenset().union(*actual) if actual else frozenset()
    hits = len(flat_reported & flat_actual)
    precision_defined = len(flat_reported) > 0
    recall_defined = len(flat_actual) > 0
    return EvalReport(
        method="m1",
        precision=hits / len(flat_reported) if precision_defined else 0.0,
        recall=hits / len(flat_actual) if recall_defined else 0.0,
        reported_count=len(reported),
        precision_defined=precision_defined,
        recall_defined=recall_defined,
    )


def _f1(precision: float, recall: float) -> float:
    if precision + recall == 0.0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def method2(
    reported: Sequence[frozenset[str]], actual: Sequence[frozenset[str]]
) -> EvalReport:
    """Per-set best-match protocol; averages the matched precisions and
    recalls over all reported sets."""
    details: list[SetMatch] = []
    for reported_set in reported:
        best: tuple[float, float, int] | None = None  # (f1, precision, -index)
        best_match: SetMatch | None = None
        for index, actual_set in enumerate(actual):
            hits = len(reported_set & actual_set)
            precision = hits / len(reported_set) if reported_set else 0.0
            recall = hits / len(actual_set) if actual_set else 0.0
            key = (_f1(precision, recall), precision, -index)
            if best is None or key > best:
                best = key
                best_match = SetMatch(
                    reported=tuple(sorted(reported_set)),
                    actual_index=index,
                    actual=tuple(sorted(actual_set)),
                    precision=precision,
                    recall=recall,
                )
        if best_match is None:  # no actual sets at all
            best_match = SetMatch(
                reported=tuple(sorted(reported_set)),
                actual_index=None,
                actual=None,
                precision=0.0,
                recall=0.0,
            )
        details.append(best_match)
    defined = len(details) > 0
    mean_precision = sum(d.precision for d in details) / len(details) if defined else 0.0
    mean_recall = sum(d.recall for d in details) / len(details) if defined else 0.0
    return EvalReport(
        method="m2",
        precision=mean_precision,
        recall=mean_recall,
        reported_count=len(reported),
        precision_defined=defined,
        recall_defined=defined,
        per_set_detail=tuple(details),
    )


def report_to_dict(report: EvalReport) -> dict:
    payload: dict = {
        "method": report.method,
        "reported_count": report.reported_count,
        "precision": report.precision,
        "recall": report.recall,
        "precision_defined": report.precision_defined,
        "recall_defined": report.recall_defined,
    }
    if report.per_set_detail is not None:
        payload["per_set_detail"] = [
            {
                "reported": list(d.reported),
                "actual_index": d.actual_index,
                "actual": list(d.actual) if d.actual is not None else None,
                "precision": d.precision,
                "recall": d.recall,
            }
            for d in report.per_set_detail
        ]
    return payload


def render_table(reports: Sequence[tuple[str, EvalReport]]) -> str:
    """Aligned-column text table: #Clones, Recall, Precision per row."""
    header = f"{'':<12}{'#Clones':>8}{'Recall':>10}{'Precision':>11}"
    rows = [header]
    for name, report in reports:
        rows.append(
            f"{name:<12}{report.reported_count:>8}"
            f"{report.recall * 100:>9.2f}%{report.precision * 100:>10.2f}%"
        )
    return "\n".join(rows)
