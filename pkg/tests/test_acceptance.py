"""Shipping gate: one test per release criterion.

Each test gathers its failures into a list and prints exactly one
``[PASS]``/``[FAIL]`` verdict line (run pytest with ``-s`` to see them
live) before asserting, so a red run still reports every criterion.
Heavy checks share work through module-scoped fixtures.
"""

import dataclasses
import json
import math
import subprocess
import sys
import time
from collections import Counter
from pathlib import Path

import numpy as np
import pytest
from fastapi.testclient import TestClient

from test_metrics import FIXTURES, expand

from storyweave.classifier import (
    classify,
    combine_features,
    init_head,
    pair_loss_and_grads,
    predict_pairs,
    train,
)
from storyweave.classifier import TrainConfig
from storyweave.corpus import Corpus, Document, Segment, tokenize
from storyweave.datasets import generate_synthetic, train_test_split
from storyweave.encoder import EncoderConfig, init_encoder_params
from storyweave.importance import (
    NN,
    NS,
    SN,
    SATELLITE_CONNECTIVES,
    importance_ranking,
    nuclearity,
)
from storyweave.metrics import (
    LABELS,
    Averages,
    EvalReport,
    LabelMetrics,
    compute_report,
    render_report,
)
from storyweave.relevance import (
    build_vocabulary,
    candidate_pairs,
    cosine,
    document_vector,
    tfidf_vector,
)
from storyweave.service import create_app

ROOT = Path(__file__).resolve().parents[1]
MINI_CORPUS = ROOT / "data" / "mini-corpus.jsonl"
TOY_CHECKPOINT = ROOT / "data" / "toy-checkpoint.npz"
RECOUNT_SCRIPT = ROOT / "scripts" / "recount_pairs.py"
GOLDEN_REPORT = Path(__file__).parent / "golden" / "eval_report.txt"


def verdict(criterion: str, failures: list[str]) -> None:
    """Print the single pass/fail line for a criterion, then assert."""
    status = "PASS" if not failures else "FAIL"
    print(f"[{status}] {criterion}")
    assert not failures, f"{criterion}: " + "; ".join(failures)


@pytest.fixture(scope="module")
def cli_runs(tmp_path_factory):
    """Two identically-seeded end-to-end CLI runs over the bundled corpus."""
    out_dirs = []
    for name in ("first", "second"):
        out = tmp_path_factory.mktemp(f"gate_{name}") / "out"
        proc = subprocess.run(
            [sys.executable, "-m", "storyweave", "run",
             "--corpus", str(MINI_CORPUS), "--ckpt", str(TOY_CHECKPOINT),
             "--seed", "0", "--out", str(out)],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0, proc.stderr
        out_dirs.append(out)
    return out_dirs


class TestAcceptance:
    def test_gradient_correctness(self):
        """Analytic gradients match central differences on every coordinate."""
        started = time.perf_counter()
        config = EncoderConfig(vocab_size=50, num_layers=2, hidden_dim=8,
                               num_heads=2, max_seq_len=16, dropout=0.0,
                               seed=3)
        rng = np.random.default_rng(11)
        params = init_head(config.hidden_dim, rng)
        params.encoder = init_encoder_params(config)
        for _, arr in params.named_arrays():
            arr[:] = rng.normal(scale=0.5, size=arr.shape)
        ids = (np.array([2, 5, 9, 14, 3]), np.array([2, 48, 21, 7]))
        label = 3

        def loss() -> float:
            value, _ = pair_loss_and_grads(ids, label, params, config,
                                           grads=None, train=False)
            return value

        grads = {name: np.zeros_like(arr)
                 for name, arr in params.named_arrays()}
        pair_loss_and_grads(ids, label, params, config,
                            grads=grads, train=False)
        step = 1e-5
        worst = 0.0
        swept = 0
        for name, arr in params.named_arrays():
            flat = arr.reshape(-1)
            gflat = grads[name].reshape(-1)
            for i in range(flat.size):
                orig = flat[i]
                flat[i] = orig + step
                up = loss()
                flat[i] = orig - step
                down = loss()
                flat[i] = orig
                fd = (up - down) / (2.0 * step)
                # The floor absorbs difference noise on coordinates whose
                # true gradient is (near) zero, e.g. key-projection biases.
                rel = abs(fd - gflat[i]) / max(abs(fd), abs(gflat[i]), 1e-5)
                worst = max(worst, rel)
                swept += 1
        elapsed = time.perf_counter() - started

        failures = []
        if swept < 1000:
            failures.append(f"only {swept} coordinates swept")
        if worst >= 1e-4:
            failures.append(f"worst relative error {worst:.3e} >= 1e-4")
        if elapsed >= 60.0:
            failures.append(f"sweep took {elapsed:.1f}s >= 60s")
        verdict("gradient-correctness", failures)

    def test_feature_concatenation_shape(self):
        """Pair features are five stacked blocks of the input width."""
        failures = []
        for width, expected in ((768, 3840), (64, 320)):
            shape = combine_features(np.zeros(width), np.zeros(width)).shape
            if shape != (expected,):
                failures.append(f"width {width} gave {shape}, "
                                f"wanted ({expected},)")
        verdict("feature-concatenation-shape", failures)

    def test_softmax_normalization(self):
        """Scores sum to one and ignore any uniform shift of the logits."""
        params = init_head(8, np.random.default_rng(3))
        shifted = dataclasses.replace(params, b_f=params.b_f + 7.25)
        rng = np.random.default_rng(7)
        worst_sum = 0.0
        worst_shift = 0.0
        negatives = 0
        for _ in range(10_000):
            scale = 10.0 ** rng.uniform(-2.0, 2.0)
            h1 = rng.normal(scale=scale, size=8)
            h2 = rng.normal(scale=scale, size=8)
            scores = classify(h1, h2, params)
            worst_sum = max(worst_sum, abs(float(scores.sum()) - 1.0))
            if (scores < 0.0).any():
                negatives += 1
            diff = np.abs(scores - classify(h1, h2, shifted)).max()
            worst_shift = max(worst_shift, float(diff))

        failures = []
        if worst_sum >= 1e-6:
            failures.append(f"worst |sum - 1| = {worst_sum:.3e} >= 1e-6")
        if negatives:
            failures.append(f"{negatives} score vectors had negative entries")
        if worst_shift >= 1e-9:
            failures.append(f"uniform logit shift moved scores by "
                            f"{worst_shift:.3e} >= 1e-9")
        verdict("softmax-normalization", failures)

    def test_sparse_math_oracle(self):
        """Sparse tf-idf, cosine, and pairing agree with a dense re-derivation.

        The oracle keeps plain ``{term: weight}`` dicts and uses math-module
        arithmetic only, so it shares no code with the sparse implementation
        beyond the tokenizer.
        """

        def dense_tfidf(tokens: list[str], all_docs: list[list[str]]) -> dict:
            n = len(all_docs)
            df: dict[str, int] = {}
            for toks in all_docs:
                for term in set(toks):
                    df[term] = df.get(term, 0) + 1
            counts = Counter(tokens)
            return {t: c * (math.log((1 + n) / (1 + df[t])) + 1.0)
                    for t, c in counts.items()}

        def dense_cosine(u: dict, v: dict) -> float:
            dot = math.fsum(w * v.get(t, 0.0) for t, w in u.items())
            nu = math.sqrt(math.fsum(w * w for w in u.values()))
            nv = math.sqrt(math.fsum(w * w for w in v.values()))
            if nu == 0.0 or nv == 0.0 or dot == 0.0:
                return 0.0
            return dot / (nu * nv)

        failures = []
        for trial in range(200):
            rng = np.random.default_rng(trial)
            pool = [f"w{k}" for k in range(int(rng.integers(4, 15)))]
            docs = [
                Document(
                    id=f"d{d}",
                    url=f"https://example.test/{trial}/{d}",
                    title=f"doc {d}",
                    body=" ".join(rng.choice(pool,
                                             size=int(rng.integers(3, 31)))),
                    topic="t",
                    language="en",
                )
                for d in range(int(rng.integers(2, 7)))
            ]
            vocab = build_vocabulary(Corpus(documents=docs))
            index_term = {i: t for t, i in vocab.term_index.items()}
            all_tokens = [tokenize(doc.body) for doc in docs]

            vectors = {}
            dense = {}
            for doc, tokens in zip(docs, all_tokens):
                vec = document_vector(doc, vocab)
                vectors[doc.id] = vec
                dense[doc.id] = dense_tfidf(tokens, all_tokens)
                as_dict = {index_term[i]: w
                           for i, w in zip(vec.indices, vec.weights)}
                if set(as_dict) != set(dense[doc.id]):
                    failures.append(f"trial {trial}: term set differs "
                                    f"for {doc.id}")
                    continue
                gap = max((abs(as_dict[t] - w)
                           for t, w in dense[doc.id].items()), default=0.0)
                if gap >= 1e-12:
                    failures.append(f"trial {trial}: tf-idf weight off "
                                    f"by {gap:.2e} for {doc.id}")

            dense_scores = {}
            for a in range(len(docs)):
                for b in range(a + 1, len(docs)):
                    ids = tuple(sorted((docs[a].id, docs[b].id)))
                    expected = dense_cosine(dense[docs[a].id],
                                            dense[docs[b].id])
                    dense_scores[ids] = expected
                    got = cosine(vectors[docs[a].id], vectors[docs[b].id])
                    if abs(got - expected) >= 1e-12:
                        failures.append(f"trial {trial}: cosine {ids} "
                                        f"off by {abs(got - expected):.2e}")

            threshold = float(rng.uniform(0.0, 0.9))
            while any(abs(s - threshold) < 1e-9
                      for s in dense_scores.values()):
                threshold += 3.7e-7
            found = {(p.id_a, p.id_b): p.score
                     for p in candidate_pairs(docs, vocab, threshold)}
            expected_ids = {ids for ids, s in dense_scores.items()
                            if s > threshold}
            if set(found) != expected_ids:
                failures.append(f"trial {trial}: pair set differs at "
                                f"threshold {threshold:.4f}")
            if len(failures) > 5:
                break
        verdict("sparse-math-oracle", failures)

    def test_metric_oracle(self):
        """Scoring matches twenty hand-counted fixtures; report text matches
        the checked-in reference rendering byte for byte."""
        failures = []
        if len(FIXTURES) != 20:
            failures.append(f"expected 20 fixtures, found {len(FIXTURES)}")
        for fixture in FIXTURES:
            gold, predicted = expand(fixture["pairs"])
            report = compute_report(gold, predicted)
            for label, (p, r, f1, support) in fixture["per_label"].items():
                m = report.per_label[label]
                if (m.precision, m.recall, m.f1, m.support) != (p, r, f1,
                                                                support):
                    failures.append(f"{fixture['name']}: {label} metrics")
            if tuple(report.micro) != fixture["micro"]:
                failures.append(f"{fixture['name']}: micro averages")
            if tuple(report.macro) != fixture["macro"]:
                failures.append(f"{fixture['name']}: macro averages")

        reference = EvalReport(
            per_label={
                "Comparison": LabelMetrics(0.50, 0.47, 0.48, 1598),
                "Contingency": LabelMetrics(0.38, 0.65, 0.48, 1582),
                "Expansion": LabelMetrics(0.50, 0.79, 0.61, 2993),
                "Temporal": LabelMetrics(0.51, 0.55, 0.53, 869),
                "None": LabelMetrics(0.49, 0.73, 0.59, 1078),
            },
            micro=Averages(0.47, 0.67, 0.55),
            macro=Averages(0.48, 0.64, 0.54),
            total_support=8120,
        )
        golden = GOLDEN_REPORT.read_text(encoding="utf-8")
        if render_report(reference) != golden:
            failures.append("rendered report differs from golden file")
        verdict("metric-oracle", failures)

    def test_learning_sanity(self):
        """Five epochs on balanced synthetic pairs reach 90% held-out
        accuracy with a strictly decreasing loss trace."""
        started = time.perf_counter()
        data = generate_synthetic(500, seed=5)
        train_pairs, test_pairs = train_test_split(data, 0.2, seed=5)
        encoder_config = EncoderConfig(vocab_size=400, num_layers=2,
                                       hidden_dim=32, num_heads=4,
                                       max_seq_len=24, dropout=0.1, seed=0)
        train_config = TrainConfig(batch_size=16, dropout=0.1,
                                   learning_rate=1e-3, epochs=5, seed=0)
        model, trace = train(train_pairs, encoder_config, train_config)
        predictions = predict_pairs(model, test_pairs)
        hits = sum(p == pair.label
                   for p, pair in zip(predictions, test_pairs))
        accuracy = hits / len(test_pairs)
        elapsed = time.perf_counter() - started

        failures = []
        if accuracy < 0.90:
            failures.append(f"held-out accuracy {accuracy:.3f} < 0.90")
        if len(trace) != train_config.epochs:
            failures.append(f"trace has {len(trace)} entries")
        if any(b >= a for a, b in zip(trace, trace[1:])):
            failures.append(f"loss trace not strictly decreasing: {trace}")
        if elapsed >= 600.0:
            failures.append(f"training took {elapsed:.0f}s >= 600s")
        verdict("learning-sanity", failures)

    def test_pipeline_determinism_and_gating(self, cli_runs):
        """Same seed twice gives byte-identical artifacts; every emitted
        candidate clears the similarity and segment-length gates; the
        standalone recount script agrees with the shipped counts."""
        first, second = cli_runs
        failures = []
        for name in ("candidates.jsonl", "candidates.txt", "stats.json"):
            if (first / name).read_bytes() != (second / name).read_bytes():
                failures.append(f"{name} differs between identical runs")
        for png in sorted(p.relative_to(first)
                          for p in first.rglob("*.png")):
            if (first / png).read_bytes() != (second / png).read_bytes():
                failures.append(f"{png} differs between identical runs")

        records = [json.loads(line) for line in
                   (first / "candidates.jsonl").read_text(
                       encoding="utf-8").splitlines()]
        if not records:
            failures.append("no candidates emitted")
        for record in records:
            if not record["doc_similarity"] > 0.15:
                failures.append(f"doc similarity {record['doc_similarity']} "
                                "not above 0.15")
            for side in ("segment_a", "segment_b"):
                seg = record[side]
                words = len(seg["text"].split())
                if seg["token_count"] < 5 or words < 5:
                    failures.append(f"{side} below the five-word floor: "
                                    f"{seg['text']!r}")

        recount = subprocess.run(
            [sys.executable, str(RECOUNT_SCRIPT), str(first)],
            capture_output=True, text=True,
        )
        if recount.returncode != 0:
            failures.append(f"recount disagreed: {recount.stdout.strip()} "
                            f"{recount.stderr.strip()}")
        verdict("pipeline-determinism-and-gating", failures)

    def test_importance_properties(self):
        """Nuclearity is mirror-consistent and the tournament ranking is
        invariant to the order segments are supplied in."""
        rng = np.random.default_rng(42)
        pool = ("storm", "lamp", "harbor", "keeper", "tower", "rain",
                "ceremony", "hall", "garden", "ship", "anchor", "rope",
                "sail", "deck", "market", "night", "winter", "stone",
                "bell", "coast")
        docs = [
            Document(id=f"v{d}", url=f"https://example.test/vocab/{d}",
                     title=f"vocab {d}",
                     body=" ".join(rng.choice(pool, size=12)),
                     topic="t", language="en")
            for d in range(6)
        ]
        vocab = build_vocabulary(Corpus(documents=docs))
        topic_vec = tfidf_vector([str(w) for w in rng.choice(pool, size=3)],
                                 vocab)

        def random_segment(tag: str) -> Segment:
            words = [str(w)
                     for w in rng.choice(pool, size=int(rng.integers(3, 9)))]
            if rng.random() < 0.35:
                words.insert(0, str(rng.choice(SATELLITE_CONNECTIVES)))
            return Segment(doc_id=tag, index=0, text=" ".join(words),
                           token_count=len(words))

        failures = []
        mirror = {NS: SN, SN: NS, NN: NN}
        for k in range(1000):
            a = random_segment(f"a{k}")
            b = random_segment(f"b{k}")
            rel_ab, conf_ab = nuclearity(a, b, topic_vec, vocab)
            rel_ba, conf_ba = nuclearity(b, a, topic_vec, vocab)
            if rel_ba != mirror[rel_ab] or conf_ab != conf_ba:
                failures.append(
                    f"pair {k}: ({rel_ab}, {conf_ab}) vs "
                    f"({rel_ba}, {conf_ba}) for {a.text!r} / {b.text!r}")
                if len(failures) > 5:
                    break

        segments = [random_segment(f"t{j}") for j in range(11)]
        baseline = importance_ranking(segments, topic_vec, vocab)
        for shuffle in range(100):
            order = rng.permutation(len(segments))
            shuffled = [segments[int(j)] for j in order]
            if importance_ranking(shuffled, topic_vec, vocab) != baseline:
                failures.append(f"shuffle {shuffle} changed the ranking")
                break
        verdict("importance-properties", failures)

    def test_service_persistence(self, cli_runs):
        """Candidate pages reproduce the pipeline files exactly and a saved
        storyline survives a full application restart."""
        run_dir = cli_runs[0]
        client = TestClient(create_app(run_dir))
        failures = []

        topics = client.get("/api/topics").json()["topics"]
        if not topics:
            failures.append("no topics listed")

        file_records = [json.loads(line) for line in
                        (run_dir / "candidates.jsonl").read_text(
                            encoding="utf-8").splitlines()]
        for entry in topics:
            topic = entry["topic"]
            paged = []
            offset = 0
            while True:
                page = client.get(
                    f"/api/topics/{topic}/candidates",
                    params={"sort": "confidence", "offset": offset,
                            "limit": 3},
                ).json()
                paged.extend(page["items"])
                offset += 3
                if offset >= page["total"]:
                    break
            from_file = [r for r in file_records if r["topic"] == topic]
            if (json.dumps(paged, sort_keys=True)
                    != json.dumps(from_file, sort_keys=True)):
                failures.append(f"paged candidates for {topic!r} differ "
                                "from the pipeline file")

        seg_records = [json.loads(line) for line in
                       (run_dir / "segments.jsonl").read_text(
                           encoding="utf-8").splitlines()]
        seg_ids = [f"{r['doc_id']}:{r['index']}" for r in seg_records[:3]]
        payload = {
            "title": "Acceptance walk",
            "topic": topics[0]["topic"] if topics else "t",
            "items": [{"segment_id": sid, "note": f"step {i}"}
                      for i, sid in enumerate(seg_ids)],
        }
        response = client.post("/api/storylines", json=payload)
        if response.status_code != 201:
            failures.append(f"create returned {response.status_code}")
            verdict("service-persistence", failures)
            return
        created = response.json()
        if created["created"] != created["modified"]:
            failures.append("fresh storyline has created != modified")

        restarted = TestClient(create_app(run_dir))
        reread = restarted.get(
            f"/api/storylines/{created['id']}").json()
        if reread != created:
            failures.append("storyline changed across restart")
        verdict("service-persistence", failures)
