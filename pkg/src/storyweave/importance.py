"""Pairwise nucleus/satellite decisions aggregated into an importance ranking.

The nuclearity call is a transparent cue-based heuristic (no learned
model): a satellite-marking connective at the start of exactly one segment
wins, then a topic-similarity gap, otherwise the segments are treated as
equal nuclei. Pairwise verdicts are combined round-robin style, a tie
counting half a win.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import Segment, tokenize
from .relevance import SparseVector, Vocabulary, cosine, segment_vector

# Leading connectives that mark their segment as the satellite.
SATELLITE_CONNECTIVES = ("because", "although", "while", "after", "when", "if")

# Minimum |cosine(a, topic) - cosine(b, topic)| for the gap cue to fire.
TOPIC_GAP_THRESHOLD = 0.1

NS = "NS"  # first segment is the nucleus
SN = "SN"  # second segment is the nucleus
NN = "NN"  # both segments are nuclei


@dataclass
class ImportanceScore:
    """Round-robin standing of one segment with respect to a topic."""

    segment_id: str
    score: float
    wins: int
    comparisons: int


def _starts_with_connective(segment: Segment, connectives: tuple[str, ...]) -> bool:
    tokens = tokenize(segment.text)
    return bool(tokens) and tokens[0] in connectives


def nuclearity(
    a: Segment,
    b: Segment,
    topic_vec: SparseVector,
    vocab: Vocabulary,
    connectives: tuple[str, ...] = SATELLITE_CONNECTIVES,
    gap_threshold: float = TOPIC_GAP_THRESHOLD,
) -> tuple[str, float]:
    """Decide which of two segments is the nucleus.

    Cues in priority order: a satellite-marking connective opening exactly
    one segment (confidence 0.9); the topic-similarity gap (0.6);
    otherwise nucleus-nucleus (0.5). When both segments open with a
    connective the first cue is inconclusive and the gap cue decides.
    """
    a_marked = _starts_with_connective(a, connectives)
    b_marked = _starts_with_connective(b, connectives)
    if a_marked != b_marked:
        return (SN, 0.9) if a_marked else (NS, 0.9)
    sim_a = cosine(segment_vector(a, vocab), topic_vec)
    sim_b = cosine(segment_vector(b, vocab), topic_vec)
    if abs(sim_a - sim_b) > gap_threshold:
        return (NS, 0.6) if sim_a > sim_b else (SN, 0.6)
    return (NN, 0.5)


def importance_ranking(
    segments: list[Segment],
    topic_vec: SparseVector,
    vocab: Vocabulary,
    connectives: tuple[str, ...] = SATELLITE_CONNECTIVES,
    gap_threshold: float = TOPIC_GAP_THRESHOLD,
) -> list[ImportanceScore]:
    """Round-robin nuclearity over all unordered segment pairs.

    A nucleus verdict is a win for the nucleus, NN is a tie for both.
    score = (wins + 0.5 * ties) / comparisons, defaulting to 0.5 for a
    lone segment. Sorted by score descending, ties by segment id.
    """
    if not segments:
        raise ValueError("importance_ranking needs at least one segment")
    wins = [0] * len(segments)
    ties = [0] * len(segments)
    comparisons = [0] * len(segments)
    for i in range(len(segments)):
        for j in range(i + 1, len(segments)):
            label, _ = nuclearity(
                segments[i], segments[j], topic_vec, vocab, connectives, gap_threshold
            )
            comparisons[i] += 1
            comparisons[j] += 1
            if label == NS:
                wins[i] += 1
            elif label == SN:
                wins[j] += 1
            else:
                ties[i] += 1
                ties[j] += 1
    scores = []
    for k, segment in enumerate(segments):
        if comparisons[k]:
            score = (wins[k] + 0.5 * ties[k]) / comparisons[k]
        else:
            score = 0.5
        scores.append(
            ImportanceScore(
                segment_id=segment.segment_id,
                score=score,
                wins=wins[k],
                comparisons=comparisons[k],
            )
        )
    order = sorted(range(len(segments)), key=lambda k: (-scores[k].score, segments[k].sort_key))
    return [scores[k] for k in order]


__all__ = [
    "ImportanceScore",
    "NN",
    "NS",
    "SATELLITE_CONNECTIVES",
    "SN",
    "TOPIC_GAP_THRESHOLD",
    "importance_ranking",
    "nuclearity",
]
