"""Corpus ingestion, language filtering and sentence segmentation.

Turns crawl output (one JSON record per line) into classification-ready
segments: documents are filtered by language, split into sentences with a
rule-based splitter, and short sentences are dropped.
"""

from __future__ import annotations

import hashlib
import json
import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

log = logging.getLogger(__name__)

DEFAULT_MIN_WORDS = 5

# Tokens ending a sentence only when followed by whitespace and an
# uppercase letter or digit.
_TERMINATORS = re.compile(r"[.!?]")

# Lowercased tokens before a '.' that never end a sentence.
ABBREVIATIONS = {
    "dr", "mr", "mrs", "ms", "prof", "st", "no", "vs", "etc", "e.g", "i.e",
}

# Characters stripped from token edges by tokenize().
_PUNCT = ".,;:!?\"'()[]{}<>`~@#$%^&*-_=+/\\|«»“”‘’–—…"

# Small stopword lists for the en/de ratio heuristic. Function words only;
# overlap between the two lists is fine, the ratios are compared.
ENGLISH_STOPWORDS = frozenset("""
a about above after again against all am an and any are as at be because
been before being below between both but by can could did do does doing
down during each few for from further had has have having he her here hers
herself him himself his how i if in into is it its itself just me more
most my myself no nor not now of off on once only or other our ours
ourselves out over own same she should so some such than that the their
theirs them themselves then there these they this those through to too
under until up very was we were what when where which while who whom why
will with would you your yours yourself yourselves
""".split())

GERMAN_STOPWORDS = frozenset("""
aber alle allem allen aller alles als also am an andere anderem anderen
anderer anderes auch auf aus bei bin bis bist da damit dann das dass dein
deine dem den denn der des dessen dich die dies diese diesem diesen dieser
dieses dir doch dort du durch ein eine einem einen einer eines er es etwas
euch euer eure für gegen gewesen hab habe haben hat hatte hatten hier hin
hinter ich ihm ihn ihnen ihr ihre im in ist ja jede jedem jeden jeder jedes
kann kein keine können mein meine mich mir mit muss nach nicht nichts noch
nun nur ob oder ohne sehr sein seine sich sie sind so sollte sondern über
um und uns unser unter vom von vor war waren was weil weiter wenn werde
werden wie wieder will wir wird wo zu zum zur zwischen
""".split())


@dataclass
class Document:
    """One crawled source text, boilerplate already stripped."""

    id: str
    url: str
    title: str
    body: str
    topic: str
    language: str = ""


@dataclass
class Segment:
    """A filtered sentence, the unit passed to the relation classifier."""

    doc_id: str
    index: int
    text: str
    token_count: int

    @property
    def segment_id(self) -> str:
        return f"{self.doc_id}:{self.index}"

    @property
    def sort_key(self) -> tuple[str, int]:
        return (self.doc_id, self.index)


@dataclass
class Corpus:
    documents: list[Document] = field(default_factory=list)
    segments: list[Segment] = field(default_factory=list)

    def document_by_id(self, doc_id: str) -> Document:
        for doc in self.documents:
            if doc.id == doc_id:
                return doc
        raise KeyError(doc_id)

    def segments_of(self, doc_id: str) -> list[Segment]:
        return [s for s in self.segments if s.doc_id == doc_id]


@dataclass
class IngestStats:
    """Counts reported alongside an ingested corpus."""

    lines: int = 0
    documents: int = 0
    empty_text: int = 0
    malformed: int = 0


def tokenize(text: str) -> list[str]:
    """Lowercase whitespace tokens with edge punctuation stripped.

    Tokens that are all punctuation disappear. Shared by the tf-idf
    vectorizer and the encoder vocabulary.
    """
    tokens = []
    for raw in text.lower().split():
        tok = raw.strip(_PUNCT)
        if tok:
            tokens.append(tok)
    return tokens


def _assign_id(url: str, line_no: int, seen: set[str]) -> str:
    if url:
        doc_id = hashlib.sha256(url.encode("utf-8")).hexdigest()[:12]
    else:
        doc_id = f"line-{line_no:06d}"
    # Duplicate urls get a deterministic suffix so ids stay unique.
    if doc_id in seen:
        n = 2
        while f"{doc_id}-{n}" in seen:
            n += 1
        doc_id = f"{doc_id}-{n}"
    seen.add(doc_id)
    return doc_id


def ingest_corpus(lines: Iterable[str]) -> tuple[Corpus, IngestStats]:
    """Parse line-delimited crawl records into a Corpus.

    Each line is a JSON object with keys url, title, text, query_term and
    optionally language. Records with empty text are dropped and counted;
    malformed lines are skipped with a warning, never aborting the ingest.
    """
    stats = IngestStats()
    documents: list[Document] = []
    seen_ids: set[str] = set()
    for line_no, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        stats.lines += 1
        try:
            record = json.loads(line)
            if not isinstance(record, dict):
                raise ValueError("record is not an object")
        except ValueError as exc:
            stats.malformed += 1
            log.warning("line %d: skipping malformed record (%s)", line_no, exc)
            continue
        body = str(record.get("text") or "")
        if not body.strip():
            stats.empty_text += 1
            continue
        topic = str(record.get("query_term") or "").strip() or "untagged"
        documents.append(
            Document(
                id=_assign_id(str(record.get("url") or ""), line_no, seen_ids),
                url=str(record.get("url") or ""),
                title=str(record.get("title") or ""),
                body=body,
                topic=topic,
                language=str(record.get("language") or ""),
            )
        )
    stats.documents = len(documents)
    return Corpus(documents=documents), stats


def detect_language(text: str) -> str:
    """Classify text as "en", "de" or "unknown" by stopword ratio."""
    tokens = tokenize(text)
    if not tokens:
        return "unknown"
    ratio_en = sum(t in ENGLISH_STOPWORDS for t in tokens) / len(tokens)
    ratio_de = sum(t in GERMAN_STOPWORDS for t in tokens) / len(tokens)
    if ratio_en > ratio_de:
        return "en"
    if ratio_de > ratio_en:
        return "de"
    return "unknown"


def filter_language(corpus: Corpus, lang: str) -> Corpus:
    """Keep documents tagged with lang; untagged ones go through the heuristic."""
    kept = []
    for doc in corpus.documents:
        if doc.language:
            tagged = doc.language.lower().split("-")[0]
            if tagged == lang.lower():
                kept.append(doc)
        elif detect_language(doc.body) == lang.lower():
            kept.append(doc)
    kept_ids = {doc.id for doc in kept}
    segments = [s for s in corpus.segments if s.doc_id in kept_ids]
    return Corpus(documents=kept, segments=segments)


def _is_abbreviation(body: str, dot_pos: int) -> bool:
    """True when the token ending at body[dot_pos] == '.' never ends a sentence."""
    start = dot_pos
    while start > 0 and not body[start - 1].isspace():
        start -= 1
    token = body[start:dot_pos].lstrip(_PUNCT)
    if not token:
        return False
    if len(token) == 1 and token.isalpha() and token.isupper():
        return True  # initials like the J in "John J. Smith"
    return token.lower() in ABBREVIATIONS


def segment_sentences(doc: Document) -> list[Segment]:
    """Rule-based sentence split of a document body.

    A boundary is '.', '!' or '?' followed by whitespace and an uppercase
    letter or digit, unless the preceding token is a known abbreviation.
    Whitespace inside each sentence is collapsed to single spaces.
    """
    body = doc.body
    starts = [0]
    for match in _TERMINATORS.finditer(body):
        after = match.end()
        nxt = after
        while nxt < len(body) and body[nxt].isspace():
            nxt += 1
        if nxt == after or nxt >= len(body):
            continue  # needs whitespace, then a following sentence
        if not (body[nxt].isupper() or body[nxt].isdigit()):
            continue
        if match.group() == "." and _is_abbreviation(body, match.start()):
            continue
        starts.append(nxt)
    starts.append(len(body))

    segments = []
    for raw_start, raw_end in zip(starts, starts[1:]):
        text = " ".join(body[raw_start:raw_end].split())
        if not text:
            continue
        segments.append(
            Segment(
                doc_id=doc.id,
                index=len(segments),
                text=text,
                token_count=len(text.split()),
            )
        )
    return segments


def filter_short(
    segments: list[Segment], min_words: int = DEFAULT_MIN_WORDS
) -> list[Segment]:
    """Drop segments with fewer than min_words whitespace tokens.

    Order and original index values are preserved.
    """
    if min_words < 1:
        raise ValueError("min_words must be >= 1")
    return [s for s in segments if s.token_count >= min_words]


def build_segments(corpus: Corpus, min_words: int = DEFAULT_MIN_WORDS) -> Corpus:
    """Segment every document and apply the length filter."""
    segments: list[Segment] = []
    for doc in corpus.documents:
        segments.extend(filter_short(segment_sentences(doc), min_words))
    return Corpus(documents=list(corpus.documents), segments=segments)


# ---------------------------------------------------------------------------
# Persistence: a corpus is a directory with two line-delimited record files.

DOCUMENTS_FILE = "documents.jsonl"
SEGMENTS_FILE = "segments.jsonl"


def write_jsonl(path: Path, records: Iterable[dict]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record, ensure_ascii=False, sort_keys=True))
            fh.write("\n")


def read_jsonl(path: Path) -> Iterator[dict]:
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                yield json.loads(line)


def save_corpus(corpus: Corpus, directory: str | Path) -> None:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    write_jsonl(directory / DOCUMENTS_FILE, (vars(d) for d in corpus.documents))
    write_jsonl(directory / SEGMENTS_FILE, (vars(s) for s in corpus.segments))


def load_corpus(directory: str | Path) -> Corpus:
    directory = Path(directory)
    documents = [Document(**r) for r in read_jsonl(directory / DOCUMENTS_FILE)]
    segments_path = directory / SEGMENTS_FILE
    segments = []
    if segments_path.exists():
        segments = [Segment(**r) for r in read_jsonl(segments_path)]
    corpus = Corpus(documents=documents, segments=segments)
    doc_ids = {d.id for d in corpus.documents}
    for segment in corpus.segments:
        if segment.doc_id not in doc_ids:
            raise ValueError(f"segment references unknown document {segment.doc_id}")
    return corpus


__all__ = [
    "ABBREVIATIONS",
    "Corpus",
    "DEFAULT_MIN_WORDS",
    "Document",
    "ENGLISH_STOPWORDS",
    "GERMAN_STOPWORDS",
    "IngestStats",
    "Segment",
    "build_segments",
    "detect_language",
    "filter_language",
    "filter_short",
    "ingest_corpus",
    "load_corpus",
    "save_corpus",
    "segment_sentences",
    "tokenize",
    "write_jsonl",
    "read_jsonl",
]
