#!/usr/bin/env python3
"""Record live API payloads into the UI's demo/fixture data module.

Runs the bundled mini corpus through the pipeline with the toy checkpoint,
captures the service responses over a test client, and writes
frontend/src/demo-data.ts. The UI's offline demo mode and its end-to-end
fixture server both read that module, so the shapes the front-end is tested
against are recorded from the real service rather than written by hand.

Usage: record_api_fixture.py [--out frontend/src/demo-data.ts]
"""

import argparse
import json
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from fastapi.testclient import TestClient

from storyweave.corpus import save_corpus
from storyweave.pipeline import (
    candidate_to_record,
    rank_candidates,
    run_pipeline_full,
    stats_to_record,
)
from storyweave.service import create_app

HEADER = """\
// Recorded API payloads for the offline demo mode and the test fixture
// server. Generated by scripts/record_api_fixture.py from a real pipeline
// run over the bundled mini corpus -- regenerate rather than edit.

import type { CandidateRecord, TopicInfo } from "./types.js";

"""


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=str(ROOT / "frontend" / "src" / "demo-data.ts"))
    args = parser.parse_args(argv)

    candidates, stats, corpus = run_pipeline_full(
        ROOT / "data" / "mini-corpus.jsonl", ROOT / "data" / "toy-checkpoint.npz"
    )
    candidates = rank_candidates(candidates, "by_confidence")

    with tempfile.TemporaryDirectory() as tmp:
        data_dir = Path(tmp)
        save_corpus(corpus, data_dir)
        with (data_dir / "candidates.jsonl").open("w", encoding="utf-8") as fh:
            for candidate in candidates:
                fh.write(json.dumps(candidate_to_record(candidate), sort_keys=True) + "\n")
        (data_dir / "stats.json").write_text(
            json.dumps(stats_to_record(stats), indent=2, sort_keys=True), encoding="utf-8"
        )
        client = TestClient(create_app(data_dir))

        topics = client.get("/api/topics").json()["topics"]
        by_topic = {}
        for entry in topics:
            page = client.get(
                f"/api/topics/{entry['topic']}/candidates",
                params={"sort": "confidence", "offset": 0, "limit": 500},
            ).json()
            assert page["total"] == len(page["items"]), "fixture must be unpaged"
            by_topic[entry["topic"]] = page["items"]

    segment_ids = sorted(
        {seg.segment_id for seg in corpus.segments}
    )

    def ts(value) -> str:
        return json.dumps(value, indent=2, ensure_ascii=False)

    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(
        HEADER
        + f"export const RECORDED_TOPICS: TopicInfo[] = {ts(topics)};\n\n"
        + "export const RECORDED_CANDIDATES: Record<string, CandidateRecord[]> = "
        + f"{ts(by_topic)};\n\n"
        + f"export const RECORDED_SEGMENT_IDS: string[] = {ts(segment_ids)};\n",
        encoding="utf-8",
    )
    total = sum(len(v) for v in by_topic.values())
    print(f"recorded {len(topics)} topics, {total} candidates -> {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
