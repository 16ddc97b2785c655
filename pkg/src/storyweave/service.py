"""HTTP service for browsing relation candidates and curating storylines.

The service is read-mostly: candidates and the corpus are loaded once from a
pipeline output directory. Storylines are the only mutable state and are
persisted to an append-only line-delimited log that is fsynced before a
mutation is acknowledged; on startup the log is replayed and the latest
version of each storyline wins.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import pipeline as pipeline_mod
from .corpus import DOCUMENTS_FILE, Corpus, load_corpus, read_jsonl
from .pipeline import RelationCandidate, Storyline, StorylineItem, rank_candidates

CANDIDATES_FILE = "candidates.jsonl"
STORYLINES_FILE = "storylines.jsonl"

DEFAULT_PAGE_LIMIT = 50
MAX_PAGE_LIMIT = 500

# query-string sort values -> rank_candidates modes
SORT_MODES = {
    "confidence": "by_confidence",
    "importance": "by_importance",
    "similarity": "by_similarity",
}


class ApiError(Exception):
    """Error carrying the HTTP status and a stable machine-readable code."""

    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


class StorylineItemIn(BaseModel):
    segment_id: str
    note: str = ""


class StorylineIn(BaseModel):
    title: str
    topic: str
    items: list[StorylineItemIn]


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="microseconds")


def storyline_to_record(storyline: Storyline) -> dict:
    return {
        "id": storyline.id,
        "title": storyline.title,
        "topic": storyline.topic,
        "items": [
            {"segment_id": item.segment_id, "note": item.note, "order": i}
            for i, item in enumerate(storyline.items)
        ],
        "created": storyline.created,
        "modified": storyline.modified,
    }


def storyline_from_record(record: dict) -> Storyline:
    items = sorted(record["items"], key=lambda r: r.get("order", 0))
    return Storyline(
        id=record["id"],
        title=record["title"],
        topic=record["topic"],
        items=[
            StorylineItem(segment_id=r["segment_id"], note=r.get("note", ""))
            for r in items
        ],
        created=record["created"],
        modified=record["modified"],
    )


@dataclass
class ServiceState:
    data_dir: Path
    corpus: Corpus
    candidates: list[RelationCandidate]
    storylines: dict[int, Storyline] = field(default_factory=dict)
    next_id: int = 1
    lock: threading.Lock = field(default_factory=threading.Lock)
    _ranked: dict[tuple[str, str], list[dict]] = field(default_factory=dict)

    @property
    def log_path(self) -> Path:
        return self.data_dir / STORYLINES_FILE

    def known_segments(self) -> set[str]:
        ids = {s.segment_id for s in self.corpus.segments}
        for c in self.candidates:
            ids.add(c.segment_a.segment_id)
            ids.add(c.segment_b.segment_id)
        return ids

    def topic_candidates(self, topic: str, sort: str) -> list[dict]:
        key = (topic, sort)
        if key not in self._ranked:
            subset = [c for c in self.candidates if c.topic == topic]
            self._ranked[key] = [
                pipeline_mod.candidate_to_record(c)
                for c in rank_candidates(subset, sort)
            ]
        return self._ranked[key]

    def append_storyline(self, storyline: Storyline) -> None:
        """Durably record one storyline version before it becomes visible."""
        line = json.dumps(
            storyline_to_record(storyline), ensure_ascii=False, sort_keys=True
        )
        with open(self.log_path, "a", encoding="utf-8") as fh:
            fh.write(line + "\n")
            fh.flush()
            os.fsync(fh.fileno())
        self.storylines[storyline.id] = storyline


def load_state(data_dir: str | Path) -> ServiceState:
    data_dir = Path(data_dir)
    if not (data_dir / DOCUMENTS_FILE).exists():
        raise FileNotFoundError(
            f"{data_dir} does not look like a pipeline output directory "
            f"(missing {DOCUMENTS_FILE})"
        )
    corpus = load_corpus(data_dir)
    candidates_path = data_dir / CANDIDATES_FILE
    candidates = (
        pipeline_mod.load_candidates(candidates_path)
        if candidates_path.exists()
        else []
    )
    state = ServiceState(data_dir=data_dir, corpus=corpus, candidates=candidates)

    if state.log_path.exists():
        for record in read_jsonl(state.log_path):
            storyline = storyline_from_record(record)
            state.storylines[storyline.id] = storyline
        if state.storylines:
            state.next_id = max(state.storylines) + 1
    return state


def _storyline_payload(payload: StorylineIn) -> None:
    if not payload.title.strip():
        raise ApiError(400, "bad_request", "storyline title must not be empty")
    if not payload.items:
        raise ApiError(400, "bad_request", "storyline needs at least one segment")


def create_app(data_dir: str | Path, ui_dir: str | Path | None = None) -> FastAPI:
    state = load_state(data_dir)
    app = FastAPI(title="storyweave", docs_url=None, redoc_url=None)
    app.state.service = state

    @app.exception_handler(ApiError)
    async def handle_api_error(request: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status,
            content={"code": exc.code, "message": exc.message},
        )

    @app.exception_handler(RequestValidationError)
    async def handle_validation(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"code": "bad_request", "message": str(exc.errors()[:1])},
        )

    @app.exception_handler(Exception)
    async def handle_unexpected(request: Request, exc: Exception):
        return JSONResponse(
            status_code=500,
            content={"code": "internal", "message": "internal server error"},
        )

    @app.get("/api/topics")
    def list_topics():
        doc_counts: dict[str, int] = {}
        for doc in state.corpus.documents:
            doc_counts[doc.topic] = doc_counts.get(doc.topic, 0) + 1
        cand_counts: dict[str, int] = {}
        for cand in state.candidates:
            cand_counts[cand.topic] = cand_counts.get(cand.topic, 0) + 1
        topics = sorted(set(doc_counts) | set(cand_counts))
        return {
            "topics": [
                {
                    "topic": t,
                    "documents": doc_counts.get(t, 0),
                    "candidates": cand_counts.get(t, 0),
                }
                for t in topics
            ]
        }

    @app.get("/api/topics/{topic}/candidates")
    def list_candidates(
        topic: str,
        sort: str = "confidence",
        offset: int = 0,
        limit: int = DEFAULT_PAGE_LIMIT,
    ):
        known = {d.topic for d in state.corpus.documents} | {
            c.topic for c in state.candidates
        }
        if topic not in known:
            raise ApiError(404, "unknown_topic", f"no such topic: {topic!r}")
        if sort not in SORT_MODES:
            raise ApiError(
                400,
                "bad_request",
                f"unknown sort mode: {sort!r}; expected one of {sorted(SORT_MODES)}",
            )
        if offset < 0:
            raise ApiError(400, "bad_request", "offset must be >= 0")
        if not 1 <= limit <= MAX_PAGE_LIMIT:
            raise ApiError(
                400, "bad_request", f"limit must be in [1, {MAX_PAGE_LIMIT}]"
            )
        records = state.topic_candidates(topic, SORT_MODES[sort])
        return {
            "topic": topic,
            "sort": sort,
            "total": len(records),
            "offset": offset,
            "limit": limit,
            "items": records[offset : offset + limit],
        }

    @app.get("/api/storylines")
    def list_storylines(topic: str | None = None):
        lines = list(state.storylines.values())
        if topic is not None:
            lines = [s for s in lines if s.topic == topic]
        lines.sort(key=lambda s: (s.modified, s.id), reverse=True)
        return {"storylines": [storyline_to_record(s) for s in lines]}

    @app.get("/api/storylines/{storyline_id}")
    def get_storyline(storyline_id: int):
        storyline = state.storylines.get(storyline_id)
        if storyline is None:
            raise ApiError(404, "unknown_storyline", f"no storyline {storyline_id}")
        return storyline_to_record(storyline)

    def _check_segments(payload: StorylineIn, known: set[str]) -> None:
        for item in payload.items:
            if item.segment_id not in known:
                raise ApiError(
                    400, "unknown_segment", f"unknown segment: {item.segment_id!r}"
                )

    def _check_title_clash(payload: StorylineIn, skip_id: int | None) -> None:
        for other in state.storylines.values():
            if other.id == skip_id:
                continue
            if other.topic == payload.topic and other.title == payload.title:
                raise ApiError(
                    409,
                    "duplicate_title",
                    f"storyline {other.id} in topic {payload.topic!r} "
                    f"already uses this title",
                )

    @app.post("/api/storylines", status_code=201)
    def create_storyline(payload: StorylineIn):
        _storyline_payload(payload)
        with state.lock:
            _check_segments(payload, state.known_segments())
            _check_title_clash(payload, skip_id=None)
            now = _now()
            storyline = Storyline(
                id=state.next_id,
                title=payload.title,
                topic=payload.topic,
                items=[
                    StorylineItem(segment_id=i.segment_id, note=i.note)
                    for i in payload.items
                ],
                created=now,
                modified=now,
            )
            state.next_id += 1
            state.append_storyline(storyline)
        return storyline_to_record(storyline)

    @app.put("/api/storylines/{storyline_id}")
    def replace_storyline(storyline_id: int, payload: StorylineIn):
        _storyline_payload(payload)
        with state.lock:
            existing = state.storylines.get(storyline_id)
            if existing is None:
                raise ApiError(
                    404, "unknown_storyline", f"no storyline {storyline_id}"
                )
            _check_segments(payload, state.known_segments())
            _check_title_clash(payload, skip_id=storyline_id)
            storyline = Storyline(
                id=existing.id,
                title=payload.title,
                topic=payload.topic,
                items=[
                    StorylineItem(segment_id=i.segment_id, note=i.note)
                    for i in payload.items
                ],
                created=existing.created,
                modified=_now(),
            )
            state.append_storyline(storyline)
        return storyline_to_record(storyline)

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app


__all__ = [
    "ApiError",
    "CANDIDATES_FILE",
    "STORYLINES_FILE",
    "ServiceState",
    "create_app",
    "load_state",
    "storyline_from_record",
    "storyline_to_record",
]
