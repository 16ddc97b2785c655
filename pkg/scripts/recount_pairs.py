#!/usr/bin/env python3
"""Recount pipeline candidates from first principles.

Reads a pipeline output directory (documents.jsonl, segments.jsonl,
candidates.jsonl, stats.json) and independently recomputes, with its own
dense tf-idf and cosine code and no imports from the package under test:

  * which same-topic document pairs clear the similarity threshold,
  * the expected candidate count sum(|A| * |B|) over qualifying pairs,
  * the gates on every emitted candidate (doc similarity and token counts).

Exits 0 and prints OK if everything agrees with the recorded outputs;
exits 1 with a diagnostic otherwise.

Usage: recount_pairs.py <output-dir> [--threshold 0.15] [--min-words 5]
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from collections import Counter
from itertools import combinations
from pathlib import Path

PUNCT = "\"'“”‘’.,;:!?()[]{}«»—–-…/"


def words(text: str) -> list[str]:
    out = []
    for raw in text.lower().split():
        token = raw.strip(PUNCT)
        if token:
            out.append(token)
    return out


def read_records(path: Path) -> list[dict]:
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]


def dense_tfidf(token_lists: list[list[str]]) -> list[dict[str, float]]:
    n_docs = len(token_lists)
    df: Counter[str] = Counter()
    for tokens in token_lists:
        df.update(set(tokens))
    vectors = []
    for tokens in token_lists:
        tf = Counter(tokens)
        vectors.append(
            {
                term: count * (math.log((1 + n_docs) / (1 + df[term])) + 1.0)
                for term, count in tf.items()
            }
        )
    return vectors


def cosine(a: dict[str, float], b: dict[str, float]) -> float:
    dot = sum(w * b[t] for t, w in a.items() if t in b)
    if dot == 0.0:
        return 0.0
    na = math.sqrt(sum(w * w for w in a.values()))
    nb = math.sqrt(sum(w * w for w in b.values()))
    if na == 0.0 or nb == 0.0:
        return 0.0
    return dot / (na * nb)


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("out_dir", type=Path)
    parser.add_argument("--threshold", type=float, default=0.15)
    parser.add_argument("--min-words", type=int, default=5)
    args = parser.parse_args()

    documents = read_records(args.out_dir / "documents.jsonl")
    segments = read_records(args.out_dir / "segments.jsonl")
    candidates = read_records(args.out_dir / "candidates.jsonl")
    stats = json.loads((args.out_dir / "stats.json").read_text(encoding="utf-8"))

    failures = []

    # Re-derive qualifying document pairs with dense tf-idf over bodies.
    vectors = dense_tfidf([words(d["body"]) for d in documents])
    by_doc: dict[str, list[dict]] = {}
    for seg in segments:
        by_doc.setdefault(seg["doc_id"], []).append(seg)

    doc_sims: dict[tuple[str, str], float] = {}
    expected_pairs = 0
    expected_candidates = 0
    for (i, a), (j, b) in combinations(enumerate(documents), 2):
        if a["topic"] != b["topic"]:
            continue
        score = cosine(vectors[i], vectors[j])
        key = tuple(sorted((a["id"], b["id"])))
        doc_sims[key] = score
        if score > args.threshold:
            expected_pairs += 1
            expected_candidates += len(by_doc.get(a["id"], [])) * len(
                by_doc.get(b["id"], [])
            )

    if stats["document_pairs"] != expected_pairs:
        failures.append(
            f"document_pairs: stats say {stats['document_pairs']}, "
            f"recount says {expected_pairs}"
        )
    if stats["segment_pairs"] != expected_candidates:
        failures.append(
            f"segment_pairs: stats say {stats['segment_pairs']}, "
            f"recount (sum |A|*|B|) says {expected_candidates}"
        )
    if len(candidates) != expected_candidates:
        failures.append(
            f"candidate records: file has {len(candidates)}, "
            f"recount says {expected_candidates}"
        )

    label_counts = Counter(c["predicted"] for c in candidates)
    for label, count in stats["label_counts"].items():
        if label_counts.get(label, 0) != count:
            failures.append(
                f"label {label}: stats say {count}, "
                f"candidates contain {label_counts.get(label, 0)}"
            )

    # Per-candidate gates.
    for c in candidates:
        key = tuple(
            sorted((c["segment_a"]["doc_id"], c["segment_b"]["doc_id"]))
        )
        doc_sim = doc_sims.get(key)
        if doc_sim is None or doc_sim <= args.threshold:
            failures.append(
                f"candidate {c['segment_a']['segment_id']} / "
                f"{c['segment_b']['segment_id']}: document pair below threshold "
                f"({doc_sim})"
            )
        if abs(doc_sim - c["doc_similarity"]) > 1e-9:
            failures.append(
                f"candidate {c['segment_a']['segment_id']}: recorded "
                f"doc_similarity {c['doc_similarity']} != recount {doc_sim}"
            )
        for side in ("segment_a", "segment_b"):
            # the length gate counts whitespace words, not stripped tokens
            n = len(c[side]["text"].split())
            if n < args.min_words:
                failures.append(
                    f"candidate {side} {c[side]['segment_id']}: "
                    f"{n} words < {args.min_words}"
                )

    if failures:
        for failure in failures:
            print(f"FAIL {failure}")
        return 1
    print(
        f"OK {expected_pairs} document pairs, {expected_candidates} candidates, "
        f"gates and counts all consistent"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
