"""Command-line interface.

Subcommands cover the full workflow: ingest a crawl file into a corpus,
pair and rank documents, train and evaluate the relation classifier, run
the end-to-end pipeline, and serve the curation API. Report-producing
commands (train, eval, run) also render PNG figures next to their text
outputs unless --no-figures is given.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import sys
from pathlib import Path

from . import corpus as corpus_mod
from . import datasets, pipeline, relevance, report
from .checkpoint import load_model, save_model
from .classifier import TrainConfig, evaluate, train
from .corpus import load_corpus, save_corpus, tokenize, write_jsonl
from .encoder import EncoderConfig
from .importance import importance_ranking
from .metrics import render_report

log = logging.getLogger(__name__)

DEFAULT_VOCAB_SIZE = 2000


def _config_section(raw: dict, name: str, cls):
    """Build a config dataclass from one section of the config file,
    rejecting unknown keys."""
    section = raw.get(name, {})
    allowed = {f.name for f in dataclasses.fields(cls)}
    unknown = set(section) - allowed
    if unknown:
        raise ValueError(f"unknown {name} config keys: {sorted(unknown)}")
    return section


def load_train_configs(path: str | None) -> tuple[EncoderConfig, TrainConfig]:
    raw = {}
    if path is not None:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
        if not isinstance(raw, dict):
            raise ValueError("config file must contain a JSON object")
        unknown = set(raw) - {"encoder", "train"}
        if unknown:
            raise ValueError(f"unknown config sections: {sorted(unknown)}")

    encoder_kwargs = _config_section(raw, "encoder", EncoderConfig)
    train_kwargs = _config_section(raw, "train", TrainConfig)
    train_config = TrainConfig(**train_kwargs)
    encoder_kwargs.setdefault("vocab_size", DEFAULT_VOCAB_SIZE)
    # a single dropout knob: the training rate applies to the encoder too
    # unless the encoder section overrides it explicitly
    encoder_kwargs.setdefault("dropout", train_config.dropout)
    encoder_kwargs.setdefault("seed", train_config.seed)
    return EncoderConfig(**encoder_kwargs), train_config


def cmd_ingest(args: argparse.Namespace) -> int:
    with open(args.input, encoding="utf-8") as fh:
        corpus, stats = corpus_mod.ingest_corpus(fh)
    retained = corpus_mod.filter_language(corpus, args.lang)
    prepared = corpus_mod.build_segments(retained, args.min_words)
    save_corpus(prepared, args.out)
    print(
        f"read {stats.lines} lines: {stats.documents} documents "
        f"({stats.empty_text} empty, {stats.malformed} malformed); "
        f"{len(prepared.documents)} kept for {args.lang!r}, "
        f"{len(prepared.segments)} segments "
        f"(min {args.min_words} words) -> {args.out}",
        file=sys.stderr,
    )
    return 0


def cmd_pair(args: argparse.Namespace) -> int:
    corpus = load_corpus(args.corpus)
    vocab = relevance.build_vocabulary(corpus)
    if args.cross_topic:
        groups = {"all": [d.id for d in corpus.documents]}
    else:
        groups = relevance.group_by_topic(corpus)
    docs_by_id = {d.id: d for d in corpus.documents}
    pairs = []
    for ids in groups.values():
        group_docs = [docs_by_id[i] for i in ids]
        pairs.extend(relevance.candidate_pairs(group_docs, vocab, args.threshold))
    write_jsonl(
        Path(args.out),
        ({"id_a": p.id_a, "id_b": p.id_b, "score": p.score} for p in pairs),
    )
    print(
        f"{len(pairs)} document pairs above {args.threshold} -> {args.out}",
        file=sys.stderr,
    )
    return 0


def cmd_rank(args: argparse.Namespace) -> int:
    corpus = load_corpus(args.corpus)
    if not corpus.segments:
        raise ValueError(
            f"corpus at {args.corpus} has no segments; run ingest first"
        )
    vocab = relevance.build_vocabulary(corpus)
    topic_vec = relevance.tfidf_vector(tokenize(args.topic), vocab)
    ranking = importance_ranking(corpus.segments, topic_vec, vocab)
    write_jsonl(Path(args.out), (vars(entry) for entry in ranking))
    print(f"ranked {len(ranking)} segments -> {args.out}", file=sys.stderr)
    return 0


def cmd_train(args: argparse.Namespace) -> int:
    data = datasets.load_pairs_tsv(args.data)
    encoder_config, train_config = load_train_configs(args.config)
    model, trace = train(data, encoder_config, train_config)
    out = Path(args.out)
    save_model(model, out)
    trace_path = out.with_name(out.stem + "_trace.json")
    trace_path.write_text(json.dumps(trace) + "\n", encoding="utf-8")
    if not args.no_figures:
        figure = report.save_loss_curve(trace, out.with_name(out.stem + "_loss.png"))
        print(f"loss curve -> {figure}", file=sys.stderr)
    print(
        f"trained on {len(data)} pairs for {train_config.epochs} epochs; "
        f"final loss {trace[-1]:.4f} -> {out}",
        file=sys.stderr,
    )
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    model = load_model(args.ckpt)
    data = datasets.load_pairs_tsv(args.data)
    result = evaluate(model, data)
    rendered = render_report(result)
    report_path = Path(args.report)
    report_path.write_text(rendered, encoding="utf-8")
    sys.stdout.write(rendered)
    if not args.no_figures:
        figure = report.save_metric_bars(
            result, report_path.with_name(report_path.stem + "_metrics.png")
        )
        print(f"metric figure -> {figure}", file=sys.stderr)
    return 0


def cmd_run(args: argparse.Namespace) -> int:
    config = pipeline.PipelineConfig(
        threshold=args.threshold,
        min_words=args.min_words,
        lang=args.lang,
        seed=args.seed,
        cross_topic=args.cross_topic,
        max_pairs_per_docpair=args.max_pairs_per_docpair,
        with_importance=not args.no_importance,
    )
    candidates, stats, prepared = pipeline.run_pipeline_full(
        args.corpus, args.ckpt, config
    )
    ranked = pipeline.rank_candidates(candidates, args.sort)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    save_corpus(prepared, out)
    pipeline.export_candidates(ranked, out / "candidates.jsonl", format="records")
    pipeline.export_candidates(ranked, out / "candidates.txt", format="table")
    stats_text = json.dumps(
        pipeline.stats_to_record(stats), ensure_ascii=False, indent=2, sort_keys=True
    )
    (out / "stats.json").write_text(stats_text + "\n", encoding="utf-8")

    if not args.no_figures:
        figures = out / "figures"
        figures.mkdir(exist_ok=True)
        report.save_label_distribution(
            stats.label_counts, figures / "label_distribution.png"
        )
        report.save_similarity_histogram(
            [c.segment_similarity for c in ranked],
            figures / "similarity_histogram.png",
        )

    print(
        f"{stats.documents_retained}/{stats.documents_ingested} documents, "
        f"{stats.topic_groups} topics, {stats.document_pairs} document pairs, "
        f"{stats.segment_pairs} candidates in {stats.duration_seconds:.2f}s "
        f"-> {out}",
        file=sys.stderr,
    )
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    ui_dir = args.ui
    if ui_dir is None:
        fallback = Path("frontend") / "dist"
        ui_dir = fallback if fallback.is_dir() else None
    app = create_app(args.data_dir, ui_dir=ui_dir)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def cmd_synth(args: argparse.Namespace) -> int:
    pairs = datasets.generate_synthetic(args.per_label, seed=args.seed)
    datasets.save_pairs_tsv(pairs, args.out)
    print(f"{len(pairs)} synthetic pairs -> {args.out}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="storyweave",
        description="Find and curate discourse relations between text segments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="parse crawl records into a corpus directory")
    p.add_argument("--input", required=True, help="line-delimited crawl records")
    p.add_argument("--lang", default="en", help="language to keep (en or de)")
    p.add_argument("--min-words", type=int, default=corpus_mod.DEFAULT_MIN_WORDS)
    p.add_argument("--out", required=True, help="corpus directory to write")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("pair", help="find similar document pairs within topics")
    p.add_argument("--corpus", required=True, help="corpus directory")
    p.add_argument("--threshold", type=float, default=pipeline.DEFAULT_THRESHOLD)
    p.add_argument("--cross-topic", action="store_true", help="pair across topics")
    p.add_argument("--out", required=True, help="pairs file to write")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("rank", help="rank segments by importance for a topic")
    p.add_argument("--corpus", required=True, help="corpus directory")
    p.add_argument("--topic", required=True, help="topic seed text")
    p.add_argument("--out", required=True, help="scores file to write")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("train", help="train the relation classifier")
    p.add_argument("--data", required=True, help="TSV of arg1, arg2, sense")
    p.add_argument("--config", default=None, help="JSON config file")
    p.add_argument("--out", required=True, help="checkpoint file to write")
    p.add_argument("--no-figures", action="store_true")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("eval", help="evaluate a checkpoint on labeled pairs")
    p.add_argument("--ckpt", required=True, help="checkpoint file")
    p.add_argument("--data", required=True, help="TSV of arg1, arg2, sense")
    p.add_argument("--report", required=True, help="report text file to write")
    p.add_argument("--no-figures", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("run", help="run the full pipeline over a corpus")
    p.add_argument("--corpus", required=True, help="crawl file or corpus directory")
    p.add_argument("--ckpt", required=True, help="trained checkpoint")
    p.add_argument("--threshold", type=float, default=pipeline.DEFAULT_THRESHOLD)
    p.add_argument("--min-words", type=int, default=corpus_mod.DEFAULT_MIN_WORDS)
    p.add_argument("--lang", default="en")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sort", choices=pipeline.RANK_MODES, default="by_confidence")
    p.add_argument("--cross-topic", action="store_true")
    p.add_argument("--max-pairs-per-docpair", type=int, default=None)
    p.add_argument("--no-importance", action="store_true")
    p.add_argument("--no-figures", action="store_true")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("serve", help="serve the curation API and UI")
    p.add_argument("--data-dir", required=True, help="pipeline output directory")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--ui", default=None, help="built UI bundle directory")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("synth", help="generate synthetic labeled pairs")
    p.add_argument("--per-label", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="TSV file to write")
    p.set_defaults(func=cmd_synth)

    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(
        level=logging.INFO, format="%(levelname)s %(name)s: %(message)s"
    )
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
