"""Siamese relation classifier over pairs of encoded text segments.

One shared encoder produces h1 and h2; their combination
[h1; h2; |h1-h2|; h1*h2; (h1+h2)/2] feeds a two-layer MLP head whose
softmax output covers the four relation classes plus None. Training is
joint (encoder and head, end to end) with Adam on mean cross-entropy.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .corpus import tokenize
from .datasets import LabeledPair
from .encoder import (
    EncoderConfig,
    EncoderParams,
    encode_backward,
    encoder_forward,
    init_encoder_params,
    softmax,
    token_ids,
    zero_grads,
)
from .metrics import LABELS, EvalReport, compute_report

log = logging.getLogger(__name__)

HEAD_HIDDEN = 100
_HEAD_INIT_STD = 0.02
_FEATURE_BLOCKS = 5


class NonFiniteError(ValueError):
    """A forward stage produced NaN or infinity."""


@dataclass
class ClassifierParams:
    """Shared encoder weights plus the two-layer MLP head."""

    encoder: EncoderParams
    w_d: np.ndarray  # (5 * hidden_dim, HEAD_HIDDEN)
    b_d: np.ndarray
    w_f: np.ndarray  # (HEAD_HIDDEN, len(LABELS))
    b_f: np.ndarray
    head: str = "softmax"  # "sigmoid" gives independent per-label scores

    def named_arrays(self):
        yield from self.encoder.named_arrays()
        yield "head.w_d", self.w_d
        yield "head.b_d", self.b_d
        yield "head.w_f", self.w_f
        yield "head.b_f", self.b_f


@dataclass
class TrainConfig:
    batch_size: int = 16
    dropout: float = 0.1
    learning_rate: float = 2e-5
    epochs: int = 5
    beta1: float = 0.9
    beta2: float = 0.999
    epsilon: float = 1e-8
    seed: int = 0
    head: str = "softmax"

    def __post_init__(self) -> None:
        if self.batch_size < 1:
            raise ValueError("batch_size must be >= 1")
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be > 0")
        if not 0.0 <= self.dropout < 1.0:
            raise ValueError("dropout must be in [0, 1)")
        if self.head not in ("softmax", "sigmoid"):
            raise ValueError(f"unknown head {self.head!r}")


@dataclass
class RelationModel:
    """Everything needed to score text pairs: config, vocab and weights."""

    config: EncoderConfig
    vocab: dict[str, int]
    params: ClassifierParams
    labels: tuple[str, ...] = LABELS

    def encode_text(self, text: str) -> np.ndarray:
        ids = token_ids(tokenize(text), self.vocab, self.config)
        hidden, _ = encoder_forward(ids, self.params.encoder, self.config)
        return hidden

    def score_pair(self, arg1: str, arg2: str) -> np.ndarray:
        return classify(self.encode_text(arg1), self.encode_text(arg2), self.params)


def init_head(hidden_dim: int, rng: np.random.Generator, head: str = "softmax") -> ClassifierParams:
    """Head-only init; the encoder slot is filled by the caller."""
    return ClassifierParams(
        encoder=None,  # type: ignore[arg-type]
        w_d=rng.normal(0.0, _HEAD_INIT_STD, (_FEATURE_BLOCKS * hidden_dim, HEAD_HIDDEN)),
        b_d=np.zeros(HEAD_HIDDEN),
        w_f=rng.normal(0.0, _HEAD_INIT_STD, (HEAD_HIDDEN, len(LABELS))),
        b_f=np.zeros(len(LABELS)),
        head=head,
    )


def combine_features(h1: np.ndarray, h2: np.ndarray) -> np.ndarray:
    """[h1; h2; |h1-h2|; h1*h2; (h1+h2)/2] — five blocks, in that order."""
    if h1.shape != h2.shape:
        raise ValueError(f"representation lengths differ: {h1.shape} vs {h2.shape}")
    return np.concatenate([h1, h2, np.abs(h1 - h2), h1 * h2, (h1 + h2) / 2.0])


def combine_features_backward(
    d_xf: np.ndarray, h1: np.ndarray, h2: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    d = len(h1)
    g1, g2, g_abs, g_prod, g_mean = (d_xf[i * d : (i + 1) * d] for i in range(5))
    sign = np.sign(h1 - h2)
    d_h1 = g1 + g_abs * sign + g_prod * h2 + 0.5 * g_mean
    d_h2 = g2 - g_abs * sign + g_prod * h1 + 0.5 * g_mean
    return d_h1, d_h2


def _check_finite(stage: str, value: np.ndarray) -> None:
    if not np.all(np.isfinite(value)):
        raise NonFiniteError(f"non-finite values at stage {stage!r}")


def _sigmoid(x: np.ndarray) -> np.ndarray:
    out = np.empty_like(x)
    pos = x >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-x[pos]))
    e = np.exp(x[~pos])
    out[~pos] = e / (1.0 + e)
    return out


@dataclass
class HeadCache:
    h1: np.ndarray
    h2: np.ndarray
    x_f: np.ndarray
    x_f_dropped: np.ndarray
    z1: np.ndarray
    a_dropped: np.ndarray
    probs: np.ndarray
    x_mask: np.ndarray | None
    a_mask: np.ndarray | None


def _head_forward(
    h1: np.ndarray,
    h2: np.ndarray,
    params: ClassifierParams,
    train: bool,
    dropout: float,
    rng: np.random.Generator | None,
) -> tuple[np.ndarray, HeadCache]:
    x_f = combine_features(h1, h2)
    _check_finite("features", x_f)

    def mask(shape) -> np.ndarray | None:
        if not train or dropout == 0.0:
            return None
        keep = 1.0 - dropout
        return (rng.random(shape) < keep) / keep

    x_mask = mask(x_f.shape)
    x_fd = x_f if x_mask is None else x_f * x_mask
    z1 = x_fd @ params.w_d + params.b_d
    _check_finite("hidden", z1)
    a = np.maximum(z1, 0.0)
    a_mask = mask(a.shape)
    a_d = a if a_mask is None else a * a_mask
    logits = a_d @ params.w_f + params.b_f
    _check_finite("logits", logits)
    probs = softmax(logits) if params.head == "softmax" else _sigmoid(logits)
    _check_finite("scores", probs)
    return probs, HeadCache(h1, h2, x_f, x_fd, z1, a_d, probs, x_mask, a_mask)


def _head_backward(
    d_logits: np.ndarray, cache: HeadCache, params: ClassifierParams,
    grads: dict[str, np.ndarray],
) -> tuple[np.ndarray, np.ndarray]:
    grads["head.w_f"] += np.outer(cache.a_dropped, d_logits)
    grads["head.b_f"] += d_logits
    d_a = d_logits @ params.w_f.T
    if cache.a_mask is not None:
        d_a = d_a * cache.a_mask
    d_z1 = d_a * (cache.z1 > 0.0)
    grads["head.w_d"] += np.outer(cache.x_f_dropped, d_z1)
    grads["head.b_d"] += d_z1
    d_xf = d_z1 @ params.w_d.T
    if cache.x_mask is not None:
        d_xf = d_xf * cache.x_mask
    return combine_features_backward(d_xf, cache.h1, cache.h2)


def classify(
    h1: np.ndarray,
    h2: np.ndarray,
    params: ClassifierParams,
    mode: str = "eval",
    dropout: float = 0.0,
    rng: np.random.Generator | None = None,
) -> np.ndarray:
    """Five relation probabilities for a pair of encoded representations.

    The softmax head sums to one; the sigmoid head scores labels
    independently. Dropout (train mode) hits the combined features and
    the ReLU output.
    """
    if mode not in ("train", "eval"):
        raise ValueError(f"unknown mode {mode!r}")
    probs, _ = _head_forward(h1, h2, params, mode == "train", dropout, rng)
    return probs


def predict_label(scores: np.ndarray) -> str:
    """argmax over the canonical label order; ties go to the earlier label."""
    return LABELS[int(np.argmax(scores))]


def _zero_all_grads(config: EncoderConfig) -> dict[str, np.ndarray]:
    grads = zero_grads(config)
    grads["head.w_d"] = np.zeros((_FEATURE_BLOCKS * config.hidden_dim, HEAD_HIDDEN))
    grads["head.b_d"] = np.zeros(HEAD_HIDDEN)
    grads["head.w_f"] = np.zeros((HEAD_HIDDEN, len(LABELS)))
    grads["head.b_f"] = np.zeros(len(LABELS))
    return grads


def pair_loss_and_grads(
    pair_ids: tuple[np.ndarray, np.ndarray],
    label_index: int,
    params: ClassifierParams,
    config: EncoderConfig,
    grads: dict[str, np.ndarray] | None = None,
    train: bool = True,
    dropout: float = 0.0,
    rng: np.random.Generator | None = None,
) -> tuple[float, dict[str, np.ndarray] | None]:
    """Loss for one labeled pair; accumulates exact gradients when grads given.

    Softmax head: cross-entropy. Sigmoid head: summed per-label binary
    cross-entropy against the one-hot target. Both share d_logits = p - y.
    """
    ids1, ids2 = pair_ids
    h1, cache1 = encoder_forward(ids1, params.encoder, config, train=train, rng=rng)
    h2, cache2 = encoder_forward(ids2, params.encoder, config, train=train, rng=rng)
    probs, head_cache = _head_forward(h1, h2, params, train, dropout, rng)

    eps = 1e-300  # only guards the log; probabilities this small are already broken
    if params.head == "softmax":
        loss = -float(np.log(probs[label_index] + eps))
    else:
        target = np.zeros(len(LABELS))
        target[label_index] = 1.0
        loss = -float(
            np.sum(target * np.log(probs + eps) + (1 - target) * np.log(1 - probs + eps))
        )
    if grads is None:
        return loss, None

    d_logits = probs.copy()
    d_logits[label_index] -= 1.0
    d_h1, d_h2 = _head_backward(d_logits, head_cache, params, grads)
    encode_backward(d_h1, cache1, grads)
    encode_backward(d_h2, cache2, grads)
    return loss, grads


class Adam:
    """First/second-moment adaptive updates, applied in place."""

    def __init__(self, config: TrainConfig):
        self.lr = config.learning_rate
        self.beta1 = config.beta1
        self.beta2 = config.beta2
        self.epsilon = config.epsilon
        self.t = 0
        self.m: dict[str, np.ndarray] = {}
        self.v: dict[str, np.ndarray] = {}

    def step(self, params: dict[str, np.ndarray], grads: dict[str, np.ndarray]) -> None:
        self.t += 1
        for name, value in params.items():
            g = grads[name]
            m = self.m.setdefault(name, np.zeros_like(value))
            v = self.v.setdefault(name, np.zeros_like(value))
            m *= self.beta1
            m += (1 - self.beta1) * g
            v *= self.beta2
            v += (1 - self.beta2) * g * g
            m_hat = m / (1 - self.beta1**self.t)
            v_hat = v / (1 - self.beta2**self.t)
            value -= self.lr * m_hat / (np.sqrt(v_hat) + self.epsilon)


def _prepare_ids(
    pairs: list[LabeledPair], vocab: dict[str, int], config: EncoderConfig
) -> list[tuple[np.ndarray, np.ndarray]]:
    return [
        (token_ids(tokenize(p.arg1), vocab, config),
         token_ids(tokenize(p.arg2), vocab, config))
        for p in pairs
    ]


def dataset_loss(
    model: RelationModel, pairs: list[LabeledPair]
) -> float:
    """Mean eval-mode loss over a labeled dataset."""
    ids = _prepare_ids(pairs, model.vocab, model.config)
    total = 0.0
    for pair_ids, pair in zip(ids, pairs):
        loss, _ = pair_loss_and_grads(
            pair_ids, LABELS.index(pair.label), model.params, model.config,
            grads=None, train=False,
        )
        total += loss
    return total / len(pairs)


def train(
    data: list[LabeledPair],
    encoder_config: EncoderConfig,
    train_config: TrainConfig,
) -> tuple[RelationModel, list[float]]:
    """Joint end-to-end training; returns the model and per-epoch losses.

    Each epoch shuffles with the seeded rng and applies one Adam step per
    batch on the mean gradient; the recorded loss is the eval-mode mean
    over the training data after the epoch.
    """
    if not data:
        raise ValueError("training data is empty")
    for pair in data:
        if pair.label not in LABELS:
            raise ValueError(f"unknown label {pair.label!r}")

    rng = np.random.default_rng(train_config.seed)
    vocab_tokens = []
    for pair in data:
        vocab_tokens.extend(tokenize(pair.arg1))
        vocab_tokens.extend(tokenize(pair.arg2))
    from .encoder import build_encoder_vocab

    vocab = build_encoder_vocab(vocab_tokens, encoder_config.vocab_size)
    params = init_head(encoder_config.hidden_dim, rng, head=train_config.head)
    params.encoder = init_encoder_params(encoder_config)
    model = RelationModel(config=encoder_config, vocab=vocab, params=params)

    param_dict = dict(params.named_arrays())
    optimizer = Adam(train_config)
    ids = _prepare_ids(data, vocab, encoder_config)
    label_indices = [LABELS.index(p.label) for p in data]

    trace = []
    for epoch in range(train_config.epochs):
        order = rng.permutation(len(data))
        for start in range(0, len(data), train_config.batch_size):
            batch = order[start : start + train_config.batch_size]
            grads = _zero_all_grads(encoder_config)
            batch_loss = 0.0
            for idx in batch:
                loss, _ = pair_loss_and_grads(
                    ids[idx], label_indices[idx], params, encoder_config,
                    grads=grads, train=True, dropout=train_config.dropout, rng=rng,
                )
                batch_loss += loss
            if not np.isfinite(batch_loss):
                raise RuntimeError(
                    f"non-finite loss in epoch {epoch + 1}, batch at {start}"
                )
            for g in grads.values():
                g /= len(batch)
            optimizer.step(param_dict, grads)
        epoch_loss = dataset_loss(model, data)
        trace.append(epoch_loss)
        log.info("epoch %d/%d: loss %.4f", epoch + 1, train_config.epochs, epoch_loss)
    return model, trace


def predict_pairs(model: RelationModel, pairs: list[LabeledPair]) -> list[str]:
    ids = _prepare_ids(pairs, model.vocab, model.config)
    predictions = []
    for ids1, ids2 in ids:
        h1, _ = encoder_forward(ids1, model.params.encoder, model.config)
        h2, _ = encoder_forward(ids2, model.params.encoder, model.config)
        predictions.append(predict_label(classify(h1, h2, model.params)))
    return predictions


def evaluate(model: RelationModel, test: list[LabeledPair]) -> EvalReport:
    """Score the model's single-label predictions on held-out pairs."""
    if not test:
        raise ValueError("test data is empty")
    predicted = predict_pairs(model, test)
    return compute_report([p.label for p in test], predicted)


__all__ = [
    "Adam",
    "ClassifierParams",
    "HEAD_HIDDEN",
    "NonFiniteError",
    "RelationModel",
    "TrainConfig",
    "classify",
    "combine_features",
    "combine_features_backward",
    "dataset_loss",
    "evaluate",
    "init_head",
    "pair_loss_and_grads",
    "predict_label",
    "predict_pairs",
    "train",
]
