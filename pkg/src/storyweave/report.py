"""Figure rendering for training, evaluation and pipeline runs.

Every function writes a PNG next to the delimited outputs and returns the
path it wrote. Rendering uses the Agg backend so it works headless.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .metrics import LABELS, EvalReport

_BAR_COLORS = ("#4878a8", "#e49444", "#6a9f58")


def save_loss_curve(trace: list[float], path: str | Path) -> Path:
    """Per-epoch training loss as a line plot."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6, 4))
    epochs = np.arange(1, len(trace) + 1)
    ax.plot(epochs, trace, marker="o", color=_BAR_COLORS[0])
    ax.set_xlabel("epoch")
    ax.set_ylabel("mean loss")
    ax.set_title("Training loss")
    ax.set_xticks(epochs)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def save_metric_bars(report: EvalReport, path: str | Path) -> Path:
    """Grouped precision / recall / F1 bars, one group per relation label."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(8, 4.5))
    x = np.arange(len(LABELS))
    width = 0.27
    series = (
        ("precision", [report.per_label[l].precision for l in LABELS]),
        ("recall", [report.per_label[l].recall for l in LABELS]),
        ("F1", [report.per_label[l].f1 for l in LABELS]),
    )
    for offset, (name, values), color in zip((-1, 0, 1), series, _BAR_COLORS):
        ax.bar(x + offset * width, values, width, label=name, color=color)
    ax.set_xticks(x)
    ax.set_xticklabels(LABELS)
    ax.set_ylim(0.0, 1.0)
    ax.set_title("Per-label metrics")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def save_label_distribution(counts: dict[str, int], path: str | Path) -> Path:
    """Bar chart of predicted-label counts from a pipeline run."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6, 4))
    values = [counts.get(label, 0) for label in LABELS]
    ax.bar(np.arange(len(LABELS)), values, color=_BAR_COLORS[0])
    ax.set_xticks(np.arange(len(LABELS)))
    ax.set_xticklabels(LABELS, rotation=20, ha="right")
    ax.set_ylabel("candidates")
    ax.set_title("Predicted relation distribution")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def save_similarity_histogram(
    values: list[float], path: str | Path, threshold: float | None = None
) -> Path:
    """Histogram of candidate segment similarities."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.hist(values, bins=20, range=(0.0, 1.0), color=_BAR_COLORS[2])
    if threshold is not None:
        ax.axvline(threshold, color="#b04040", linestyle="--", label="pair threshold")
        ax.legend()
    ax.set_xlabel("cosine similarity")
    ax.set_ylabel("pairs")
    ax.set_title("Segment similarity")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


__all__ = [
    "save_label_distribution",
    "save_loss_curve",
    "save_metric_bars",
    "save_similarity_histogram",
]
