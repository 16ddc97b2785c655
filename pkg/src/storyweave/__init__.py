"""storyweave: find, classify and curate discourse relations between
sentences drawn from topically related documents.

The workflow: ingest crawled documents into a filtered, sentence-segmented
corpus; pair similar documents within a topic; classify segment pairs with
a trained relation model; rank the resulting candidates; and serve them to
a curation UI where an editor assembles storylines.
"""

from .classifier import RelationModel, TrainConfig, evaluate, train
from .corpus import Corpus, Document, Segment, ingest_corpus, load_corpus, save_corpus
from .encoder import EncoderConfig
from .metrics import LABELS, EvalReport, compute_report, render_report
from .pipeline import (
    PipelineConfig,
    PipelineStats,
    RelationCandidate,
    Storyline,
    rank_candidates,
    run_pipeline,
)

__version__ = "0.1.0"

__all__ = [
    "Corpus",
    "Document",
    "EncoderConfig",
    "EvalReport",
    "LABELS",
    "PipelineConfig",
    "PipelineStats",
    "RelationCandidate",
    "RelationModel",
    "Segment",
    "Storyline",
    "TrainConfig",
    "compute_report",
    "evaluate",
    "ingest_corpus",
    "load_corpus",
    "rank_candidates",
    "render_report",
    "run_pipeline",
    "save_corpus",
    "train",
    "__version__",
]
