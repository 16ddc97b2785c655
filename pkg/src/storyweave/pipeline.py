"""End-to-end run: ingest, filter, group, pair, classify, export.

Produces relation candidates (segment pairs with similarity, five relation
scores and importance values) plus run statistics, with deterministic
output order so repeated runs are byte-identical.
"""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import corpus as corpus_mod
from . import relevance
from .checkpoint import load_model
from .classifier import RelationModel, classify, predict_label
from .corpus import Corpus, Segment, tokenize
from .importance import importance_ranking
from .metrics import LABELS

DEFAULT_THRESHOLD = relevance.DEFAULT_SIMILARITY_THRESHOLD


class PipelineError(RuntimeError):
    """A pipeline stage failed; the message names the stage."""


@contextmanager
def _stage(name: str):
    try:
        yield
    except PipelineError:
        raise
    except Exception as exc:
        raise PipelineError(f"stage {name!r} failed: {exc}") from exc


@dataclass
class PipelineConfig:
    threshold: float = DEFAULT_THRESHOLD
    min_words: int = corpus_mod.DEFAULT_MIN_WORDS
    lang: str = "en"
    seed: int = 0
    cross_topic: bool = False
    max_pairs_per_docpair: int | None = None
    with_importance: bool = True


@dataclass
class RelationCandidate:
    topic: str
    segment_a: Segment
    segment_b: Segment
    doc_similarity: float
    segment_similarity: float
    scores: np.ndarray
    predicted: str
    importance_a: float = 0.5
    importance_b: float = 0.5

    @property
    def confidence(self) -> float:
        return float(np.max(self.scores))


@dataclass
class PipelineStats:
    documents_ingested: int = 0
    documents_retained: int = 0
    topic_groups: int = 0
    document_pairs: int = 0
    segment_pairs: int = 0
    label_counts: dict[str, int] = field(default_factory=dict)
    duration_seconds: float = 0.0


@dataclass
class StorylineItem:
    segment_id: str
    note: str = ""


@dataclass
class Storyline:
    """An editor-assembled ordered sequence of segments."""

    id: int
    title: str
    topic: str
    items: list[StorylineItem]
    created: str
    modified: str


def load_input_corpus(path: str | Path) -> tuple[Corpus, int]:
    """Accept either a crawl records file or a persisted corpus directory.

    Returns the corpus and the number of documents ingested.
    """
    path = Path(path)
    if path.is_dir():
        loaded = corpus_mod.load_corpus(path)
        return loaded, len(loaded.documents)
    with open(path, encoding="utf-8") as fh:
        ingested, stats = corpus_mod.ingest_corpus(fh)
    return ingested, stats.documents


def run_pipeline(
    corpus_path: str | Path,
    checkpoint_path: str | Path,
    config: PipelineConfig | None = None,
) -> tuple[list[RelationCandidate], PipelineStats]:
    """Execute every stage over a corpus with a trained relation model."""
    candidates, stats, _ = run_pipeline_full(corpus_path, checkpoint_path, config)
    return candidates, stats


def run_pipeline_full(
    corpus_path: str | Path,
    checkpoint_path: str | Path,
    config: PipelineConfig | None = None,
) -> tuple[list[RelationCandidate], PipelineStats, Corpus]:
    """Like run_pipeline, but also returns the filtered, segmented corpus
    so callers can persist it next to the candidates."""
    config = config or PipelineConfig()
    started = time.perf_counter()
    stats = PipelineStats()

    with _stage("load"):
        raw, stats.documents_ingested = load_input_corpus(corpus_path)
        model = load_model(checkpoint_path)

    with _stage("filter_language"):
        retained = corpus_mod.filter_language(raw, config.lang)
        stats.documents_retained = len(retained.documents)

    with _stage("segment"):
        prepared = corpus_mod.build_segments(retained, config.min_words)

    stats.label_counts = {label: 0 for label in LABELS}
    if not prepared.documents:
        stats.duration_seconds = time.perf_counter() - started
        return [], stats, prepared

    with _stage("vocabulary"):
        vocab = relevance.build_vocabulary(prepared)

    with _stage("group_by_topic"):
        groups = relevance.group_by_topic(prepared)
        stats.topic_groups = len(groups)
        if config.cross_topic:
            pair_groups = {"all": [d.id for d in prepared.documents]}
        else:
            pair_groups = groups

    docs_by_id = {doc.id: doc for doc in prepared.documents}

    with _stage("candidate_pairs"):
        doc_pairs = []
        for ids in pair_groups.values():
            group_docs = [docs_by_id[i] for i in ids]
            doc_pairs.extend(
                relevance.candidate_pairs(group_docs, vocab, config.threshold)
            )
        stats.document_pairs = len(doc_pairs)

    with _stage("importance"):
        importance: dict[str, float] = {}
        if config.with_importance:
            for topic, ids in groups.items():
                topic_vec = relevance.tfidf_vector(tokenize(topic), vocab)
                group_segments = [
                    s for i in ids for s in prepared.segments_of(i)
                ]
                if not group_segments:
                    continue
                for entry in importance_ranking(group_segments, topic_vec, vocab):
                    importance[entry.segment_id] = entry.score

    with _stage("classify"):
        hidden: dict[str, np.ndarray] = {}

        def encoded(segment: Segment) -> np.ndarray:
            if segment.segment_id not in hidden:
                hidden[segment.segment_id] = model.encode_text(segment.text)
            return hidden[segment.segment_id]

        candidates = []
        for pair in doc_pairs:
            doc_a, doc_b = docs_by_id[pair.id_a], docs_by_id[pair.id_b]
            if doc_a.topic == doc_b.topic:
                topic = doc_a.topic
            else:
                topic = f"{doc_a.topic} + {doc_b.topic}"
            seg_pairs = relevance.segment_pairs(pair, prepared)
            if config.max_pairs_per_docpair is not None:
                seg_pairs = seg_pairs[: config.max_pairs_per_docpair]
            for seg_a, seg_b in seg_pairs:
                scores = classify(encoded(seg_a), encoded(seg_b), model.params)
                predicted = predict_label(scores)
                stats.label_counts[predicted] += 1
                candidates.append(
                    RelationCandidate(
                        topic=topic,
                        segment_a=seg_a,
                        segment_b=seg_b,
                        doc_similarity=pair.score,
                        segment_similarity=relevance.cosine(
                            relevance.segment_vector(seg_a, vocab),
                            relevance.segment_vector(seg_b, vocab),
                        ),
                        scores=scores,
                        predicted=predicted,
                        importance_a=importance.get(seg_a.segment_id, 0.5),
                        importance_b=importance.get(seg_b.segment_id, 0.5),
                    )
                )
        stats.segment_pairs = len(candidates)

    stats.duration_seconds = time.perf_counter() - started
    return candidates, stats, prepared


RANK_MODES = ("by_confidence", "by_importance", "by_similarity")


def rank_candidates(
    candidates: list[RelationCandidate], mode: str = "by_confidence"
) -> list[RelationCandidate]:
    """Stable descending sort by the chosen key; ties by topic and segment ids."""
    if mode == "by_confidence":
        key = lambda c: c.confidence
    elif mode == "by_importance":
        key = lambda c: c.importance_a + c.importance_b
    elif mode == "by_similarity":
        key = lambda c: c.segment_similarity
    else:
        raise ValueError(f"unknown ranking mode {mode!r}; expected one of {RANK_MODES}")
    return sorted(
        candidates,
        key=lambda c: (-key(c), c.topic, c.segment_a.sort_key, c.segment_b.sort_key),
    )


# ---------------------------------------------------------------------------
# Serialization and export

def _segment_record(segment: Segment) -> dict:
    return {
        "segment_id": segment.segment_id,
        "doc_id": segment.doc_id,
        "index": segment.index,
        "text": segment.text,
        "token_count": segment.token_count,
    }


def candidate_to_record(candidate: RelationCandidate) -> dict:
    return {
        "topic": candidate.topic,
        "segment_a": _segment_record(candidate.segment_a),
        "segment_b": _segment_record(candidate.segment_b),
        "doc_similarity": candidate.doc_similarity,
        "segment_similarity": candidate.segment_similarity,
        "scores": {label: float(s) for label, s in zip(LABELS, candidate.scores)},
        "predicted": candidate.predicted,
        "importance_a": candidate.importance_a,
        "importance_b": candidate.importance_b,
    }


def candidate_from_record(record: dict) -> RelationCandidate:
    def seg(part: dict) -> Segment:
        return Segment(
            doc_id=part["doc_id"],
            index=part["index"],
            text=part["text"],
            token_count=part.get("token_count", len(part["text"].split())),
        )

    return RelationCandidate(
        topic=record["topic"],
        segment_a=seg(record["segment_a"]),
        segment_b=seg(record["segment_b"]),
        doc_similarity=record["doc_similarity"],
        segment_similarity=record["segment_similarity"],
        scores=np.array([record["scores"][label] for label in LABELS]),
        predicted=record["predicted"],
        importance_a=record["importance_a"],
        importance_b=record["importance_b"],
    )


def stats_to_record(stats: PipelineStats) -> dict:
    # duration is deliberately left out: persisted stats must be
    # byte-identical across same-seed runs.
    return {
        "documents_ingested": stats.documents_ingested,
        "documents_retained": stats.documents_retained,
        "topic_groups": stats.topic_groups,
        "document_pairs": stats.document_pairs,
        "segment_pairs": stats.segment_pairs,
        "label_counts": dict(stats.label_counts),
    }


_TABLE_HEADERS = ("Topic", "Segment A", "Segment B", "S.", "Co.", "Ct.", "E.", "T.", "N.")


def render_candidate_table(candidates: list[RelationCandidate]) -> str:
    """Aligned text table with two-decimal scores; the winning score is
    marked with a leading asterisk."""
    rows = []
    for c in candidates:
        winner = int(np.argmax(c.scores))
        cells = [c.topic, c.segment_a.text, c.segment_b.text, f"{c.segment_similarity:.2f}"]
        for i, value in enumerate(c.scores):
            mark = "*" if i == winner else ""
            cells.append(f"{mark}{value:.2f}")
        rows.append(tuple(cells))

    widths = [len(h) for h in _TABLE_HEADERS]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))

    def fmt(cells) -> str:
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

    lines = [fmt(_TABLE_HEADERS)]
    lines.extend(fmt(row) for row in rows)
    return "\n".join(lines) + "\n"


def export_candidates(
    candidates: list[RelationCandidate], path: str | Path, format: str = "records"
) -> None:
    """Write candidates as line-delimited records or an aligned table."""
    path = Path(path)
    if format == "records":
        corpus_mod.write_jsonl(path, (candidate_to_record(c) for c in candidates))
    elif format == "table":
        path.write_text(render_candidate_table(candidates), encoding="utf-8")
    else:
        raise ValueError(f"unknown export format {format!r}")


def load_candidates(path: str | Path) -> list[RelationCandidate]:
    return [candidate_from_record(r) for r in corpus_mod.read_jsonl(Path(path))]


__all__ = [
    "DEFAULT_THRESHOLD",
    "RANK_MODES",
    "PipelineConfig",
    "PipelineError",
    "PipelineStats",
    "RelationCandidate",
    "Storyline",
    "StorylineItem",
    "candidate_from_record",
    "candidate_to_record",
    "export_candidates",
    "load_candidates",
    "load_input_corpus",
    "rank_candidates",
    "render_candidate_table",
    "run_pipeline",
    "run_pipeline_full",
    "stats_to_record",
]
