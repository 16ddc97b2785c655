"""Topic relevance via sparse tf-idf vectors and cosine similarity.

Documents are grouped by the query term that retrieved them; within each
group, document pairs whose cosine similarity clears a threshold gate the
segment pairs handed to the relation classifier.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

from .corpus import Corpus, Document, Segment, tokenize

DEFAULT_SIMILARITY_THRESHOLD = 0.15


@dataclass
class Vocabulary:
    """Term index plus document frequencies for idf weighting."""

    term_index: dict[str, int]
    document_frequency: dict[str, int]
    n_docs: int

    def __len__(self) -> int:
        return len(self.term_index)

    def idf(self, term: str) -> float:
        df = self.document_frequency[term]
        return math.log((1 + self.n_docs) / (1 + df)) + 1.0


@dataclass
class SparseVector:
    """Non-zero weights at strictly increasing term indices."""

    indices: list[int] = field(default_factory=list)
    weights: list[float] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.indices)

    def norm(self) -> float:
        return math.sqrt(sum(w * w for w in self.weights))


@dataclass
class SimilarityPair:
    """An unordered document (or segment) pair, stored once with id_a < id_b."""

    id_a: str
    id_b: str
    score: float


def build_vocabulary(corpus: Corpus, min_df: int = 1) -> Vocabulary:
    """Collect terms over document bodies; indices are lexicographic.

    Terms appearing in fewer than min_df documents are pruned.
    """
    if not corpus.documents:
        raise ValueError("empty corpus")
    df: Counter[str] = Counter()
    for doc in corpus.documents:
        df.update(set(tokenize(doc.body)))
    terms = sorted(t for t, count in df.items() if count >= min_df)
    return Vocabulary(
        term_index={t: i for i, t in enumerate(terms)},
        document_frequency={t: df[t] for t in terms},
        n_docs=len(corpus.documents),
    )


def tfidf_vector(tokens: list[str], vocab: Vocabulary) -> SparseVector:
    """Raw-count tf times smoothed idf: ln((1+N)/(1+df)) + 1.

    Tokens outside the vocabulary contribute nothing. Cosine normalizes,
    so no length normalization is applied here.
    """
    counts = Counter(t for t in tokens if t in vocab.term_index)
    entries = sorted(
        (vocab.term_index[t], count * vocab.idf(t)) for t, count in counts.items()
    )
    return SparseVector(
        indices=[i for i, _ in entries], weights=[w for _, w in entries]
    )


def cosine(a: SparseVector, b: SparseVector) -> float:
    """dot(a, b) / (|a| |b|); 0.0 when either vector is empty."""
    if not a.indices or not b.indices:
        return 0.0
    dot = 0.0
    i = j = 0
    while i < len(a.indices) and j < len(b.indices):
        if a.indices[i] == b.indices[j]:
            dot += a.weights[i] * b.weights[j]
            i += 1
            j += 1
        elif a.indices[i] < b.indices[j]:
            i += 1
        else:
            j += 1
    if dot == 0.0:
        return 0.0
    # rounding can push the quotient a few ulp past 1; Cauchy-Schwarz says
    # the true value never exceeds it
    return min(1.0, dot / (a.norm() * b.norm()))


def document_vector(doc: Document, vocab: Vocabulary) -> SparseVector:
    return tfidf_vector(tokenize(doc.body), vocab)


def segment_vector(segment: Segment, vocab: Vocabulary) -> SparseVector:
    return tfidf_vector(tokenize(segment.text), vocab)


def group_by_topic(corpus: Corpus) -> dict[str, list[str]]:
    """Partition document ids by topic, preserving corpus order."""
    groups: dict[str, list[str]] = {}
    for doc in corpus.documents:
        groups.setdefault(doc.topic, []).append(doc.id)
    return groups


def topic_relevance(
    seed: Document, candidates: list[Document], vocab: Vocabulary
) -> list[tuple[str, float]]:
    """Rank candidates by cosine similarity to the seed document."""
    seed_vec = document_vector(seed, vocab)
    scored = [
        (doc.id, cosine(seed_vec, document_vector(doc, vocab))) for doc in candidates
    ]
    scored.sort(key=lambda item: (-item[1], item[0]))
    return scored


def candidate_pairs(
    group: list[Document],
    vocab: Vocabulary,
    threshold: float = DEFAULT_SIMILARITY_THRESHOLD,
) -> list[SimilarityPair]:
    """All unordered in-group pairs with cosine strictly above threshold.

    Pairs come out in canonical order: id_a < id_b, sorted by (id_a, id_b).
    """
    if not 0.0 <= threshold <= 1.0:
        raise ValueError("threshold must be in [0, 1]")
    docs = sorted(group, key=lambda d: d.id)
    vectors = {doc.id: document_vector(doc, vocab) for doc in docs}
    pairs = []
    for i, doc_a in enumerate(docs):
        for doc_b in docs[i + 1 :]:
            score = cosine(vectors[doc_a.id], vectors[doc_b.id])
            if score > threshold:
                pairs.append(SimilarityPair(doc_a.id, doc_b.id, score))
    return pairs


def segment_pairs(
    pair: SimilarityPair, corpus: Corpus
) -> list[tuple[Segment, Segment]]:
    """Cross product of the two documents' filtered segments.

    The first element always comes from the lexicographically smaller
    document id (pair ids are already canonical).
    """
    segs_a = corpus.segments_of(pair.id_a)
    segs_b = corpus.segments_of(pair.id_b)
    return [(a, b) for a in segs_a for b in segs_b]


__all__ = [
    "DEFAULT_SIMILARITY_THRESHOLD",
    "SimilarityPair",
    "SparseVector",
    "Vocabulary",
    "build_vocabulary",
    "candidate_pairs",
    "cosine",
    "document_vector",
    "group_by_topic",
    "segment_pairs",
    "segment_vector",
    "tfidf_vector",
    "topic_relevance",
]
