"""Precision/recall/F1 reporting for multi-class label predictions.

Per-label and micro metrics are computed as single integer divisions
(2*TP/(2*TP+FP+FN) for F1), which keeps them exactly equal to the rational
definitions; macro metrics are unweighted label means.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

LABELS = ("Comparison", "Contingency", "Expansion", "Temporal", "None")


@dataclass
class LabelMetrics:
    precision: float
    recall: float
    f1: float
    support: int


class Averages(NamedTuple):
    precision: float
    recall: float
    f1: float


@dataclass
class EvalReport:
    per_label: dict[str, LabelMetrics]
    micro: Averages
    macro: Averages
    total_support: int


def _prf(tp: int, fp: int, fn: int) -> Averages:
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = 2 * tp / (2 * tp + fp + fn) if 2 * tp + fp + fn else 0.0
    return Averages(precision, recall, f1)


def compute_report(
    gold: list[str], predicted: list[str], labels: tuple[str, ...] = LABELS
) -> EvalReport:
    """Score predictions against gold labels over a fixed label set."""
    if len(gold) != len(predicted):
        raise ValueError("gold and predicted must have the same length")
    tp = {label: 0 for label in labels}
    fp = {label: 0 for label in labels}
    fn = {label: 0 for label in labels}
    support = {label: 0 for label in labels}
    for g, p in zip(gold, predicted):
        if g not in tp:
            raise ValueError(f"unknown gold label {g!r}")
        if p not in tp:
            raise ValueError(f"unknown predicted label {p!r}")
        support[g] += 1
        if g == p:
            tp[g] += 1
        else:
            fn[g] += 1
            fp[p] += 1

    per_label = {}
    for label in labels:
        precision, recall, f1 = _prf(tp[label], fp[label], fn[label])
        per_label[label] = LabelMetrics(precision, recall, f1, support[label])

    micro = _prf(sum(tp.values()), sum(fp.values()), sum(fn.values()))
    macro = Averages(
        *(
            math.fsum(getattr(per_label[label], name) for label in labels)
            / len(labels)
            for name in ("precision", "recall", "f1")
        )
    )
    return EvalReport(
        per_label=per_label,
        micro=micro,
        macro=macro,
        total_support=len(gold),
    )


def render_report(report: EvalReport) -> str:
    """Aligned text table: one row per label plus micro/macro average rows."""
    headers = ("Relation", "Precision", "Recall", "F1-score", "Support")
    rows = []
    for label, m in report.per_label.items():
        rows.append((label, f"{m.precision:.2f}", f"{m.recall:.2f}",
                     f"{m.f1:.2f}", str(m.support)))
    rows.append(("-",) * 5)
    for name, triple in (("Micro avg.", report.micro), ("Macro avg.", report.macro)):
        p, r, f1 = triple
        rows.append((name, f"{p:.2f}", f"{r:.2f}", f"{f1:.2f}",
                     str(report.total_support)))

    widths = [len(h) for h in headers]
    for row in rows:
        if row[0] == "-":
            continue
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))

    def fmt(cells: tuple[str, ...]) -> str:
        first = cells[0].ljust(widths[0])
        rest = [c.rjust(w) for c, w in zip(cells[1:], widths[1:])]
        return "  ".join([first] + rest).rstrip()

    lines = [fmt(headers), "-" * (sum(widths) + 2 * (len(widths) - 1))]
    for row in rows:
        if row[0] == "-":
            lines.append("-" * (sum(widths) + 2 * (len(widths) - 1)))
        else:
            lines.append(fmt(row))
    return "\n".join(lines) + "\n"


__all__ = [
    "Averages",
    "EvalReport",
    "LABELS",
    "LabelMetrics",
    "compute_report",
    "render_report",
]
