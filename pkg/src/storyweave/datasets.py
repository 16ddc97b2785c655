"""Labeled sentence-pair data: a synthetic connective corpus and a TSV reader.

The synthetic generator produces balanced pairs whose second argument opens
with a connective characteristic of the label (None pairs get unrelated
clauses and no connective). The TSV reader ingests externally annotated
relations, collapsing fine-grained sense strings to their top-level class.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .metrics import LABELS

log = logging.getLogger(__name__)


@dataclass
class LabeledPair:
    arg1: str
    arg2: str
    label: str


# Second-argument openers per label. None pairs carry no connective.
CONNECTIVE_TEMPLATES: dict[str, tuple[str, ...]] = {
    "Temporal": ("then", "afterwards", "in 1912"),
    "Contingency": ("because", "as a result"),
    "Comparison": ("however", "but", "while"),
    "Expansion": ("in addition", "for example"),
    "None": (),
}

# Openers that read as plain conjunctions take no comma.
_NO_COMMA_OPENERS = frozenset({"but", "while", "because", "then"})

_SUBJECTS = (
    "the brewery", "the factory", "the writer", "the architect", "the museum",
    "the band", "the station", "the gallery", "the bridge", "the workshop",
)
_PREDICATES = (
    "opened a new hall", "released a second album", "moved to the riverside",
    "drew large crowds", "closed for the winter", "published a short memoir",
    "hosted a public reading", "expanded the old building",
    "organised a street festival", "restored the brick facade",
)
_TAILS = (
    "in the northern district", "near the old harbour", "during the festival",
    "for several seasons", "despite the heavy rain", "on the main square",
    "with local volunteers", "to great acclaim",
)


def _clause(rng: np.random.Generator) -> str:
    return " ".join(
        (
            _SUBJECTS[rng.integers(len(_SUBJECTS))],
            _PREDICATES[rng.integers(len(_PREDICATES))],
            _TAILS[rng.integers(len(_TAILS))],
        )
    )


def _capitalize(text: str) -> str:
    return text[0].upper() + text[1:]


def generate_synthetic(n_per_label: int, seed: int = 0) -> list[LabeledPair]:
    """Balanced template pairs, deterministic for a given seed."""
    if n_per_label < 1:
        raise ValueError("n_per_label must be >= 1")
    rng = np.random.default_rng(seed)
    pairs = []
    for label in LABELS:
        connectives = CONNECTIVE_TEMPLATES[label]
        for _ in range(n_per_label):
            arg1 = _capitalize(_clause(rng)) + "."
            body = _clause(rng)
            if connectives:
                opener = connectives[rng.integers(len(connectives))]
                joiner = " " if opener in _NO_COMMA_OPENERS else ", "
                arg2 = f"{_capitalize(opener)}{joiner}{body}."
            else:
                arg2 = _capitalize(body) + "."
            pairs.append(LabeledPair(arg1=arg1, arg2=arg2, label=label))
    return pairs


def _top_level_label(sense: str) -> str | None:
    head = sense.split(".", 1)[0].strip()
    if head in ("Temporal", "Contingency", "Comparison", "Expansion"):
        return head
    # Entity-based and no-relation annotations count as None.
    if head in ("None", "EntRel", "NoRel"):
        return "None"
    if head == "Expansions":
        return "Expansion"
    return None


def load_pairs_tsv(path: str | Path) -> list[LabeledPair]:
    """Read tab-separated (arg1, arg2, sense) relations.

    Sense strings collapse to their top-level class by prefix; lines with
    unknown senses or missing columns are skipped with a diagnostic.
    """
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            columns = line.split("\t")
            if len(columns) != 3 or not columns[0].strip() or not columns[1].strip():
                log.warning("%s:%d: skipping malformed relation line", path, line_no)
                continue
            label = _top_level_label(columns[2])
            if label is None:
                log.warning("%s:%d: skipping unknown sense %r", path, line_no, columns[2])
                continue
            pairs.append(LabeledPair(arg1=columns[0], arg2=columns[1], label=label))
    return pairs


def save_pairs_tsv(pairs: list[LabeledPair], path: str | Path) -> None:
    """Write pairs in the TSV format load_pairs_tsv reads back."""
    with open(path, "w", encoding="utf-8") as fh:
        for pair in pairs:
            arg1 = " ".join(pair.arg1.split())
            arg2 = " ".join(pair.arg2.split())
            fh.write(f"{arg1}\t{arg2}\t{pair.label}\n")


def train_test_split(
    pairs: list[LabeledPair], test_fraction: float = 0.2, seed: int = 0
) -> tuple[list[LabeledPair], list[LabeledPair]]:
    """Seeded shuffle split; test gets the rounded-down tail share."""
    if not 0.0 < test_fraction < 1.0:
        raise ValueError("test_fraction must be in (0, 1)")
    rng = np.random.default_rng(seed)
    order = rng.permutation(len(pairs))
    n_test = int(len(pairs) * test_fraction)
    test_idx = set(order[:n_test].tolist())
    train = [pairs[i] for i in range(len(pairs)) if i not in test_idx]
    test = [pairs[i] for i in range(len(pairs)) if i in test_idx]
    return train, test


__all__ = [
    "CONNECTIVE_TEMPLATES",
    "LabeledPair",
    "generate_synthetic",
    "load_pairs_tsv",
    "save_pairs_tsv",
    "train_test_split",
]
