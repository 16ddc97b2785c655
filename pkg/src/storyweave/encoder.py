"""Desk-scale transformer text encoder with hand-written gradients.

A word-level, CLS-pooled encoder small enough to train from scratch on a
CPU: token + learned positional embeddings, post-norm residual blocks of
multi-head self-attention and a GELU feed-forward, all in float64. The
backward pass is exact reverse-mode differentiation of the forward pass,
so analytic gradients can be checked against finite differences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np
from scipy.special import erf

PAD_ID = 0
UNK_ID = 1
CLS_ID = 2
_RESERVED = ("<pad>", "<unk>", "<cls>")

_LN_EPS = 1e-12
_INIT_STD = 0.02


@dataclass
class EncoderConfig:
    vocab_size: int
    num_layers: int = 2
    hidden_dim: int = 64
    num_heads: int = 4
    ff_dim: int = 0  # 0 means 4 * hidden_dim
    max_seq_len: int = 64
    dropout: float = 0.1
    seed: int = 0

    def __post_init__(self) -> None:
        if self.ff_dim == 0:
            self.ff_dim = 4 * self.hidden_dim
        for name in ("vocab_size", "num_layers", "hidden_dim", "num_heads",
                     "ff_dim", "max_seq_len"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        if self.hidden_dim % self.num_heads:
            raise ValueError("hidden_dim must be divisible by num_heads")
        if not 0.0 <= self.dropout < 1.0:
            raise ValueError("dropout must be in [0, 1)")

    @property
    def head_dim(self) -> int:
        return self.hidden_dim // self.num_heads


@dataclass
class LayerParams:
    w_q: np.ndarray
    b_q: np.ndarray
    w_k: np.ndarray
    b_k: np.ndarray
    w_v: np.ndarray
    b_v: np.ndarray
    w_o: np.ndarray
    b_o: np.ndarray
    w_ff1: np.ndarray
    b_ff1: np.ndarray
    w_ff2: np.ndarray
    b_ff2: np.ndarray
    ln1_gamma: np.ndarray
    ln1_beta: np.ndarray
    ln2_gamma: np.ndarray
    ln2_beta: np.ndarray


@dataclass
class EncoderParams:
    token_embedding: np.ndarray
    position_embedding: np.ndarray
    layers: list[LayerParams] = field(default_factory=list)

    def named_arrays(self) -> Iterator[tuple[str, np.ndarray]]:
        yield "token_embedding", self.token_embedding
        yield "position_embedding", self.position_embedding
        for i, layer in enumerate(self.layers):
            for name, value in vars(layer).items():
                yield f"layers.{i}.{name}", value


def expected_shapes(config: EncoderConfig) -> dict[str, tuple[int, ...]]:
    """Every parameter name with its shape, for checkpoint validation."""
    d, ff = config.hidden_dim, config.ff_dim
    shapes: dict[str, tuple[int, ...]] = {
        "token_embedding": (config.vocab_size, d),
        "position_embedding": (config.max_seq_len, d),
    }
    for i in range(config.num_layers):
        prefix = f"layers.{i}."
        for w in ("w_q", "w_k", "w_v", "w_o"):
            shapes[prefix + w] = (d, d)
        for b in ("b_q", "b_k", "b_v", "b_o"):
            shapes[prefix + b] = (d,)
        shapes[prefix + "w_ff1"] = (d, ff)
        shapes[prefix + "b_ff1"] = (ff,)
        shapes[prefix + "w_ff2"] = (ff, d)
        shapes[prefix + "b_ff2"] = (d,)
        for g in ("ln1_gamma", "ln1_beta", "ln2_gamma", "ln2_beta"):
            shapes[prefix + g] = (d,)
    return shapes


def init_encoder_params(config: EncoderConfig) -> EncoderParams:
    """Seeded normal(0, 0.02) weights; zero biases; identity layer norms."""
    rng = np.random.default_rng(config.seed)
    d, ff = config.hidden_dim, config.ff_dim

    def normal(*shape: int) -> np.ndarray:
        return rng.normal(0.0, _INIT_STD, size=shape)

    layers = []
    for _ in range(config.num_layers):
        layers.append(
            LayerParams(
                w_q=normal(d, d), b_q=np.zeros(d),
                w_k=normal(d, d), b_k=np.zeros(d),
                w_v=normal(d, d), b_v=np.zeros(d),
                w_o=normal(d, d), b_o=np.zeros(d),
                w_ff1=normal(d, ff), b_ff1=np.zeros(ff),
                w_ff2=normal(ff, d), b_ff2=np.zeros(d),
                ln1_gamma=np.ones(d), ln1_beta=np.zeros(d),
                ln2_gamma=np.ones(d), ln2_beta=np.zeros(d),
            )
        )
    return EncoderParams(
        token_embedding=normal(config.vocab_size, d),
        position_embedding=normal(config.max_seq_len, d),
        layers=layers,
    )


def build_encoder_vocab(tokens: Iterator[str] | list[str], vocab_size: int) -> dict[str, int]:
    """Map the most frequent tokens to ids, reserving PAD/UNK/CLS.

    Frequency descending, lexicographic tiebreak. Tokens that do not make
    the cut map to UNK at encode time.
    """
    from collections import Counter

    if vocab_size < len(_RESERVED):
        raise ValueError("vocab_size must cover the reserved ids")
    counts = Counter(tokens)
    ranked = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    vocab = {tok: i for i, tok in enumerate(_RESERVED)}
    for token, _ in ranked[: vocab_size - len(_RESERVED)]:
        vocab[token] = len(vocab)
    return vocab


def token_ids(tokens: list[str], vocab: dict[str, int], config: EncoderConfig) -> np.ndarray:
    """Prepend CLS, map through the vocab (OOV -> UNK), truncate."""
    ids = [CLS_ID] + [vocab.get(t, UNK_ID) for t in tokens]
    return np.asarray(ids[: config.max_seq_len], dtype=np.intp)


# ---------------------------------------------------------------------------
# Forward / backward primitives


def gelu(x: np.ndarray) -> np.ndarray:
    return 0.5 * x * (1.0 + erf(x / math.sqrt(2.0)))


def gelu_grad(x: np.ndarray) -> np.ndarray:
    cdf = 0.5 * (1.0 + erf(x / math.sqrt(2.0)))
    pdf = np.exp(-0.5 * x * x) / math.sqrt(2.0 * math.pi)
    return cdf + x * pdf


def softmax(x: np.ndarray, axis: int = -1) -> np.ndarray:
    shifted = x - x.max(axis=axis, keepdims=True)
    e = np.exp(shifted)
    return e / e.sum(axis=axis, keepdims=True)


def layer_norm_forward(
    x: np.ndarray, gamma: np.ndarray, beta: np.ndarray
) -> tuple[np.ndarray, tuple]:
    mean = x.mean(axis=-1, keepdims=True)
    var = ((x - mean) ** 2).mean(axis=-1, keepdims=True)
    inv_std = 1.0 / np.sqrt(var + _LN_EPS)
    x_hat = (x - mean) * inv_std
    return gamma * x_hat + beta, (x_hat, inv_std, gamma)


def layer_norm_backward(
    d_out: np.ndarray, cache: tuple
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    x_hat, inv_std, gamma = cache
    d_gamma = (d_out * x_hat).sum(axis=0)
    d_beta = d_out.sum(axis=0)
    d_hat = d_out * gamma
    dx = inv_std * (
        d_hat
        - d_hat.mean(axis=-1, keepdims=True)
        - x_hat * (d_hat * x_hat).mean(axis=-1, keepdims=True)
    )
    return dx, d_gamma, d_beta


def _split_heads(x: np.ndarray, num_heads: int) -> np.ndarray:
    length, dim = x.shape
    return x.reshape(length, num_heads, dim // num_heads).transpose(1, 0, 2)


def _merge_heads(x: np.ndarray) -> np.ndarray:
    heads, length, head_dim = x.shape
    return x.transpose(1, 0, 2).reshape(length, heads * head_dim)


@dataclass
class EncoderCache:
    """Everything the backward pass needs, captured during forward."""

    config: EncoderConfig
    params: EncoderParams
    ids: np.ndarray
    x0: np.ndarray
    layers: list[dict]


def encoder_forward(
    ids: np.ndarray,
    params: EncoderParams,
    config: EncoderConfig,
    train: bool = False,
    rng: np.random.Generator | None = None,
) -> tuple[np.ndarray, EncoderCache]:
    """Run the full stack over one id sequence; returns (CLS state, cache)."""
    if train and config.dropout > 0.0 and rng is None:
        raise ValueError("train-mode dropout needs an rng")
    length = len(ids)
    scale = 1.0 / math.sqrt(config.head_dim)
    x = params.token_embedding[ids] + params.position_embedding[:length]
    x0 = x
    layer_caches = []

    def dropout_mask(shape: tuple[int, ...]) -> np.ndarray | None:
        if not train or config.dropout == 0.0:
            return None
        keep = 1.0 - config.dropout
        return (rng.random(shape) < keep) / keep

    for layer in params.layers:
        cache: dict = {"x_in": x}
        q = _split_heads(x @ layer.w_q + layer.b_q, config.num_heads)
        k = _split_heads(x @ layer.w_k + layer.b_k, config.num_heads)
        v = _split_heads(x @ layer.w_v + layer.b_v, config.num_heads)
        scores = (q @ k.transpose(0, 2, 1)) * scale
        attn = softmax(scores, axis=-1)
        context = _merge_heads(attn @ v)
        attn_out = context @ layer.w_o + layer.b_o
        attn_mask = dropout_mask(attn_out.shape)
        if attn_mask is not None:
            attn_out = attn_out * attn_mask
        x1, ln1_cache = layer_norm_forward(
            x + attn_out, layer.ln1_gamma, layer.ln1_beta
        )
        f1 = x1 @ layer.w_ff1 + layer.b_ff1
        g = gelu(f1)
        f2 = g @ layer.w_ff2 + layer.b_ff2
        ff_mask = dropout_mask(f2.shape)
        if ff_mask is not None:
            f2 = f2 * ff_mask
        x2, ln2_cache = layer_norm_forward(x1 + f2, layer.ln2_gamma, layer.ln2_beta)
        cache.update(
            q=q, k=k, v=v, attn=attn, context=context,
            attn_mask=attn_mask, ln1=ln1_cache, x1=x1,
            f1=f1, g=g, ff_mask=ff_mask, ln2=ln2_cache,
        )
        layer_caches.append(cache)
        x = x2

    return x[0], EncoderCache(config=config, params=params, ids=ids, x0=x0, layers=layer_caches)


def encode(
    tokens: list[str],
    vocab: dict[str, int],
    params: EncoderParams,
    config: EncoderConfig,
    mode: str = "eval",
    rng: np.random.Generator | None = None,
) -> np.ndarray:
    """Fixed-size representation of a token list (the CLS state).

    Eval mode is deterministic; train mode applies dropout from the rng.
    An empty token list encodes the CLS token alone.
    """
    if mode not in ("train", "eval"):
        raise ValueError(f"unknown mode {mode!r}")
    ids = token_ids(tokens, vocab, config)
    hidden, _ = encoder_forward(ids, params, config, train=mode == "train", rng=rng)
    return hidden


def zero_grads(config: EncoderConfig) -> dict[str, np.ndarray]:
    return {name: np.zeros(shape) for name, shape in expected_shapes(config).items()}


def encode_backward(
    d_hidden: np.ndarray,
    cache: EncoderCache | None,
    grads: dict[str, np.ndarray] | None = None,
) -> dict[str, np.ndarray]:
    """Exact gradients of every encoder parameter for one forward pass.

    d_hidden is the loss gradient at the returned CLS state. Accumulates
    into grads when given (name -> array, as in zero_grads).
    """
    if cache is None:
        raise ValueError("encode_backward needs the cached forward state")
    config, params = cache.config, cache.params
    if grads is None:
        grads = zero_grads(config)
    scale = 1.0 / math.sqrt(config.head_dim)
    length = len(cache.ids)

    dx = np.zeros((length, config.hidden_dim))
    dx[0] = d_hidden

    for i in range(config.num_layers - 1, -1, -1):
        layer = params.layers[i]
        c = cache.layers[i]
        prefix = f"layers.{i}."

        d_sum2, d_g2, d_b2 = layer_norm_backward(dx, c["ln2"])
        grads[prefix + "ln2_gamma"] += d_g2
        grads[prefix + "ln2_beta"] += d_b2
        d_f2 = d_sum2 if c["ff_mask"] is None else d_sum2 * c["ff_mask"]
        grads[prefix + "w_ff2"] += c["g"].T @ d_f2
        grads[prefix + "b_ff2"] += d_f2.sum(axis=0)
        d_g = d_f2 @ layer.w_ff2.T
        d_f1 = d_g * gelu_grad(c["f1"])
        grads[prefix + "w_ff1"] += c["x1"].T @ d_f1
        grads[prefix + "b_ff1"] += d_f1.sum(axis=0)
        d_x1 = d_sum2 + d_f1 @ layer.w_ff1.T

        d_sum1, d_g1, d_b1 = layer_norm_backward(d_x1, c["ln1"])
        grads[prefix + "ln1_gamma"] += d_g1
        grads[prefix + "ln1_beta"] += d_b1
        d_attn_out = d_sum1 if c["attn_mask"] is None else d_sum1 * c["attn_mask"]
        grads[prefix + "w_o"] += c["context"].T @ d_attn_out
        grads[prefix + "b_o"] += d_attn_out.sum(axis=0)
        d_context = _split_heads(d_attn_out @ layer.w_o.T, config.num_heads)

        attn, q, k, v = c["attn"], c["q"], c["k"], c["v"]
        d_attn = d_context @ v.transpose(0, 2, 1)
        d_v = attn.transpose(0, 2, 1) @ d_context
        d_scores = (d_attn - (d_attn * attn).sum(axis=-1, keepdims=True)) * attn
        d_q = (d_scores @ k) * scale
        d_k = (d_scores.transpose(0, 2, 1) @ q) * scale

        x_in = c["x_in"]
        d_x_in = d_sum1
        for name, d_proj, weight in (
            ("q", d_q, layer.w_q), ("k", d_k, layer.w_k), ("v", d_v, layer.w_v)
        ):
            flat = _merge_heads(d_proj)
            grads[prefix + f"w_{name}"] += x_in.T @ flat
            grads[prefix + f"b_{name}"] += flat.sum(axis=0)
            d_x_in = d_x_in + flat @ weight.T
        dx = d_x_in

    np.add.at(grads["token_embedding"], cache.ids, dx)
    grads["position_embedding"][:length] += dx
    return grads


__all__ = [
    "CLS_ID",
    "EncoderCache",
    "EncoderConfig",
    "EncoderParams",
    "LayerParams",
    "PAD_ID",
    "UNK_ID",
    "build_encoder_vocab",
    "encode",
    "encode_backward",
    "encoder_forward",
    "expected_shapes",
    "gelu",
    "gelu_grad",
    "init_encoder_params",
    "layer_norm_backward",
    "layer_norm_forward",
    "softmax",
    "token_ids",
    "zero_grads",
]
