"""Model checkpoints: one npz container with named tensors and a JSON header.

The header carries the encoder configuration, the token vocabulary, the
label order and the head kind; every tensor shape is validated against the
configuration on load.
"""

from __future__ import annotations

import json
from dataclasses import asdict
from pathlib import Path

import numpy as np

from .classifier import ClassifierParams, RelationModel
from .encoder import EncoderConfig, EncoderParams, LayerParams, expected_shapes
from .metrics import LABELS

_META_KEY = "__meta__"
_FORMAT = "storyweave-checkpoint"


def _head_shapes(hidden_dim: int) -> dict[str, tuple[int, ...]]:
    from .classifier import HEAD_HIDDEN, _FEATURE_BLOCKS

    return {
        "head.w_d": (_FEATURE_BLOCKS * hidden_dim, HEAD_HIDDEN),
        "head.b_d": (HEAD_HIDDEN,),
        "head.w_f": (HEAD_HIDDEN, len(LABELS)),
        "head.b_f": (len(LABELS),),
    }


def save_model(model: RelationModel, path: str | Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    meta = {
        "format": _FORMAT,
        "version": 1,
        "encoder_config": asdict(model.config),
        "vocab": model.vocab,
        "labels": list(model.labels),
        "head": model.params.head,
    }
    arrays = dict(model.params.named_arrays())
    np.savez(path, **arrays, **{_META_KEY: np.array(json.dumps(meta))})


def load_model(path: str | Path) -> RelationModel:
    """Load and validate a checkpoint; any shape mismatch is an error."""
    path = Path(path)
    with np.load(path, allow_pickle=False) as archive:
        if _META_KEY not in archive:
            raise ValueError(f"{path} is not a {_FORMAT} file")
        meta = json.loads(str(archive[_META_KEY]))
        if meta.get("format") != _FORMAT:
            raise ValueError(f"{path} is not a {_FORMAT} file")
        config = EncoderConfig(**meta["encoder_config"])
        wanted = expected_shapes(config) | _head_shapes(config.hidden_dim)
        arrays = {}
        for name, shape in wanted.items():
            if name not in archive:
                raise ValueError(f"checkpoint missing tensor {name}")
            value = archive[name]
            if value.shape != shape:
                raise ValueError(
                    f"tensor {name} has shape {value.shape}, expected {shape}"
                )
            arrays[name] = value.astype(np.float64)

    layers = []
    for i in range(config.num_layers):
        prefix = f"layers.{i}."
        layers.append(
            LayerParams(**{
                key: arrays[prefix + key]
                for key in (
                    "w_q", "b_q", "w_k", "b_k", "w_v", "b_v", "w_o", "b_o",
                    "w_ff1", "b_ff1", "w_ff2", "b_ff2",
                    "ln1_gamma", "ln1_beta", "ln2_gamma", "ln2_beta",
                )
            })
        )
    encoder = EncoderParams(
        token_embedding=arrays["token_embedding"],
        position_embedding=arrays["position_embedding"],
        layers=layers,
    )
    params = ClassifierParams(
        encoder=encoder,
        w_d=arrays["head.w_d"],
        b_d=arrays["head.b_d"],
        w_f=arrays["head.w_f"],
        b_f=arrays["head.b_f"],
        head=meta.get("head", "softmax"),
    )
    labels = tuple(meta.get("labels", LABELS))
    if labels != LABELS:
        raise ValueError(f"checkpoint label order {labels} does not match {LABELS}")
    return RelationModel(config=config, vocab=meta["vocab"], params=params)


__all__ = ["load_model", "save_model"]
