import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from storyweave.encoder import (
    CLS_ID,
    PAD_ID,
    UNK_ID,
    EncoderConfig,
    build_encoder_vocab,
    encode,
    encode_backward,
    encoder_forward,
    expected_shapes,
    gelu,
    gelu_grad,
    init_encoder_params,
    layer_norm_forward,
    softmax,
    token_ids,
    zero_grads,
)

# ---------------------------------------------------------------------------
# Scalar reference route: plain-Python arithmetic, no numpy, so the forward
# oracles below share nothing with the implementation except the weight
# literals.


def pair_softmax(a: float, b: float) -> tuple[float, float]:
    m = max(a, b)
    ea, eb = math.exp(a - m), math.exp(b - m)
    return ea / (ea + eb), eb / (ea + eb)


def scalar_layer_norm(x: tuple, gamma: tuple, beta: tuple) -> tuple:
    mean = math.fsum(x) / len(x)
    var = math.fsum((v - mean) ** 2 for v in x) / len(x)
    inv = 1.0 / math.sqrt(var + 1e-12)
    return tuple(gamma[j] * (x[j] - mean) * inv + beta[j] for j in range(len(x)))


def scalar_gelu(x: float) -> float:
    return 0.5 * x * (1.0 + math.erf(x / math.sqrt(2.0)))


def scalar_affine(x: tuple, w: tuple, b: tuple) -> tuple:
    return tuple(
        math.fsum(x[i] * w[i][j] for i in range(len(x))) + b[j]
        for j in range(len(b))
    )


def micro_config(**overrides) -> EncoderConfig:
    base = dict(vocab_size=5, num_layers=1, hidden_dim=2, num_heads=1,
                ff_dim=2, max_seq_len=4, dropout=0.0, seed=0)
    base.update(overrides)
    return EncoderConfig(**base)


def blank_params(config: EncoderConfig):
    """Parameters with every array zeroed, ready for explicit assignment."""
    params = init_encoder_params(config)
    for _, arr in params.named_arrays():
        arr[:] = 0.0
    return params


def randomized_params(config: EncoderConfig, seed: int):
    """Parameters drawn at a scale where attention is far from uniform."""
    params = init_encoder_params(config)
    rng = np.random.default_rng(seed)
    for _, arr in params.named_arrays():
        arr[:] = rng.normal(scale=0.5, size=arr.shape)
    return params


# Fixed weights for the general one-head forward oracle (hidden size 2).
GEN2 = {
    "w_q": ((1.0, 0.0), (0.5, 1.0)), "b_q": (0.1, -0.1),
    "w_k": ((0.8, 0.2), (0.0, 1.2)), "b_k": (0.0, 0.05),
    "w_v": ((1.0, -0.5), (0.3, 0.7)), "b_v": (-0.2, 0.1),
    "w_o": ((0.9, 0.1), (-0.2, 1.1)), "b_o": (0.05, -0.05),
    "ln1_gamma": (1.5, 0.5), "ln1_beta": (0.1, -0.1),
    "w_ff1": ((1.0, -1.0), (0.5, 2.0)), "b_ff1": (0.1, -0.2),
    "w_ff2": ((0.7, 0.3), (-0.4, 1.1)), "b_ff2": (0.05, 0.0),
    "ln2_gamma": (2.0, 1.0), "ln2_beta": (0.0, 0.3),
    "tok": ((1.0, 0.5), (-0.5, 1.0)),
    "pos": ((0.25, 0.0), (0.0, -0.5)),
}

# Fixed weights for the two-head forward oracle (hidden size 4, ff size 3).
HEADS4 = {
    "w_q": ((-0.53, -0.09, -0.91, 0.05), (-0.22, -1.03, -0.96, 1.17),
            (0.47, -0.12, 0.34, -0.55), (-0.48, -1.02, -1.07, 0.74)),
    "b_q": (0.75, -1.19, -0.41, -0.99),
    "w_k": ((-0.08, 0.28, 0.12, -0.88), (0.49, 0.27, -0.08, -0.49),
            (1.0, -1.0, -0.85, -0.29), (-0.58, 0.28, 0.47, 0.49)),
    "b_k": (0.66, -0.78, 0.59, -0.61),
    "w_v": ((0.09, -0.67, 0.75, -0.94), (-0.17, 0.32, 0.47, -0.97),
            (1.16, -0.5, -0.13, -0.47), (-1.1, -0.61, -0.42, 0.18)),
    "b_v": (-1.03, 1.03, -0.72, 0.07),
    "w_o": ((-0.35, -0.34, 0.99, 0.93), (0.26, -0.53, -0.83, -0.08),
            (-0.79, -0.01, -1.03, -1.16), (0.08, -0.26, 1.19, -0.3)),
    "b_o": (0.08, -0.26, 0.66, -0.29),
    "ln1_gamma": (-0.58, -0.1, 0.73, 0.05),
    "ln1_beta": (0.43, 0.25, -0.64, -0.04),
    "w_ff1": ((-0.27, 0.71, -0.55), (0.75, -0.34, -0.4),
              (1.01, 0.89, 0.1), (0.78, 0.88, 0.65)),
    "b_ff1": (0.21, 0.57, -1.07),
    "w_ff2": ((-0.41, 0.05, -0.9, -0.7), (-0.77, -0.62, -0.31, -0.5),
              (1.02, -1.14, 0.16, 0.32)),
    "b_ff2": (0.46, -0.44, 1.17, 0.24),
    "ln2_gamma": (0.49, -1.05, -0.28, -0.62),
    "ln2_beta": (0.91, -0.34, -0.64, 0.83),
    "tok": ((-0.76, -0.25, 0.99, -1.14), (-0.83, 0.0, -0.11, 1.14)),
    "pos": ((0.95, 0.35, -1.13, -0.75), (0.13, -0.17, 1.12, -0.09)),
}


def install_layer(params, table: dict) -> None:
    layer = params.layers[0]
    for name in ("w_q", "b_q", "w_k", "b_k", "w_v", "b_v", "w_o", "b_o",
                 "ln1_gamma", "ln1_beta", "w_ff1", "b_ff1", "w_ff2", "b_ff2",
                 "ln2_gamma", "ln2_beta"):
        getattr(layer, name)[:] = table[name]


class TestVocabulary:
    def test_reserved_ids_come_first(self):
        vocab = build_encoder_vocab(["ash"], 10)
        assert vocab["<pad>"] == PAD_ID == 0
        assert vocab["<unk>"] == UNK_ID == 1
        assert vocab["<cls>"] == CLS_ID == 2
        assert vocab["ash"] == 3

    def test_frequency_descending_then_lexicographic(self):
        vocab = build_encoder_vocab(["oak", "elm", "elm", "fir", "fir"], 10)
        assert vocab["elm"] == 3
        assert vocab["fir"] == 4
        assert vocab["oak"] == 5

    def test_capped_at_vocab_size(self):
        vocab = build_encoder_vocab([f"w{i:02d}" for i in range(20)], 8)
        assert len(vocab) == 8
        assert set(vocab.values()) == set(range(8))

    def test_rejects_vocab_smaller_than_reserved_ids(self):
        with pytest.raises(ValueError):
            build_encoder_vocab(["ash"], 2)

    def test_token_ids_prepend_cls_and_map_oov_to_unk(self):
        vocab = build_encoder_vocab(["ash", "ash", "oak"], 10)
        config = micro_config(vocab_size=10, max_seq_len=8)
        ids = token_ids(["ash", "mystery", "oak"], vocab, config)
        np.testing.assert_array_equal(
            ids, [CLS_ID, vocab["ash"], UNK_ID, vocab["oak"]])

    def test_token_ids_truncate_to_max_seq_len(self):
        vocab = build_encoder_vocab(["ash"], 10)
        config = micro_config(vocab_size=10, max_seq_len=4)
        ids = token_ids(["ash"] * 9, vocab, config)
        assert len(ids) == 4
        np.testing.assert_array_equal(ids, [CLS_ID, 3, 3, 3])


class TestConfigValidation:
    def test_ff_dim_defaults_to_four_times_hidden(self):
        config = EncoderConfig(vocab_size=10, hidden_dim=16, num_heads=4)
        assert config.ff_dim == 64

    def test_head_dim(self):
        config = EncoderConfig(vocab_size=10, hidden_dim=12, num_heads=3)
        assert config.head_dim == 4

    def test_rejects_indivisible_heads(self):
        with pytest.raises(ValueError):
            EncoderConfig(vocab_size=10, hidden_dim=10, num_heads=4)

    def test_rejects_dropout_of_one(self):
        with pytest.raises(ValueError):
            EncoderConfig(vocab_size=10, dropout=1.0)

    def test_rejects_nonpositive_sizes(self):
        with pytest.raises(ValueError):
            EncoderConfig(vocab_size=0)
        with pytest.raises(ValueError):
            EncoderConfig(vocab_size=10, num_layers=0)


class TestInitialization:
    def test_arrays_match_expected_shapes(self):
        config = EncoderConfig(vocab_size=11, num_layers=3, hidden_dim=6,
                               num_heads=3, max_seq_len=9, seed=4)
        params = init_encoder_params(config)
        named = dict(params.named_arrays())
        shapes = expected_shapes(config)
        assert set(named) == set(shapes)
        for name, arr in named.items():
            assert arr.shape == shapes[name], name
        assert set(zero_grads(config)) == set(shapes)

    def test_biases_zero_and_layer_norms_identity(self):
        params = init_encoder_params(micro_config(hidden_dim=8, num_heads=2))
        layer = params.layers[0]
        for name in ("b_q", "b_k", "b_v", "b_o", "b_ff1", "b_ff2",
                     "ln1_beta", "ln2_beta"):
            assert not getattr(layer, name).any(), name
        np.testing.assert_array_equal(layer.ln1_gamma, 1.0)
        np.testing.assert_array_equal(layer.ln2_gamma, 1.0)

    def test_weight_scale(self):
        config = EncoderConfig(vocab_size=2000, hidden_dim=64, num_heads=4)
        emb = init_encoder_params(config).token_embedding
        assert abs(emb.mean()) < 5e-4
        assert 0.019 < emb.std() < 0.021

    def test_same_seed_reproduces_parameters(self):
        config = micro_config(seed=7)
        first = dict(init_encoder_params(config).named_arrays())
        second = dict(init_encoder_params(config).named_arrays())
        for name, arr in first.items():
            np.testing.assert_array_equal(arr, second[name])


class TestActivations:
    def test_gelu_fixed_points(self):
        assert gelu(np.array([0.0]))[0] == 0.0
        # gelu(x) = x * Phi(x); Phi(1) for the standard normal.
        np.testing.assert_allclose(
            gelu(np.array([1.0]))[0], 0.8413447460685429, rtol=0, atol=1e-15)
        np.testing.assert_allclose(
            gelu(np.array([-1.0]))[0], -0.15865525393145707, rtol=0, atol=1e-15)

    def test_gelu_asymptotes(self):
        np.testing.assert_allclose(gelu(np.array([8.0]))[0], 8.0,
                                   rtol=0, atol=1e-12)
        np.testing.assert_allclose(gelu(np.array([-8.0]))[0], 0.0,
                                   rtol=0, atol=1e-12)

    def test_gelu_grad_matches_finite_differences(self):
        xs = np.linspace(-4.0, 4.0, 81)
        h = 1e-6
        fd = (gelu(xs + h) - gelu(xs - h)) / (2.0 * h)
        np.testing.assert_allclose(gelu_grad(xs), fd, rtol=0, atol=1e-8)

    @given(st.lists(st.floats(-30.0, 30.0), min_size=1, max_size=8))
    def test_softmax_rows_are_distributions(self, values):
        out = softmax(np.array([values]))
        assert np.all(out >= 0.0)
        np.testing.assert_allclose(out.sum(), 1.0, rtol=0, atol=1e-12)

    @given(st.lists(st.floats(-30.0, 30.0), min_size=1, max_size=8),
           st.floats(-50.0, 50.0))
    def test_softmax_shift_invariance(self, values, shift):
        base = softmax(np.array(values))
        shifted = softmax(np.array(values) + shift)
        np.testing.assert_allclose(shifted, base, rtol=0, atol=1e-12)

    @given(st.lists(st.floats(-50.0, 50.0), min_size=2, max_size=12))
    @settings(max_examples=200)
    def test_layer_norm_rows_standardized(self, values):
        x = np.array([values])
        assume(float(np.var(x)) > 1e-6)
        n = len(values)
        out, _ = layer_norm_forward(x, np.ones(n), np.zeros(n))
        assert abs(float(out.mean())) < 1e-6
        assert abs(float(out.var()) - 1.0) < 1e-6

    def test_layer_norm_applies_gamma_and_beta(self):
        x = np.array([[2.0, -2.0]])
        out, _ = layer_norm_forward(x, np.array([3.0, 0.5]),
                                    np.array([1.0, -1.0]))
        np.testing.assert_allclose(out, [[4.0, -1.5]], rtol=0, atol=1e-6)


class TestForwardOracles:
    """The forward pass against scalar arithmetic on fixed tiny weights.

    With two hidden units a layer norm collapses every row to +/-1 (only
    the sign of the deviation survives), so for the 2-d configurations the
    cached attention, context, and feed-forward activations carry the
    discriminating comparisons; the 4-d two-head oracle checks the full
    unsaturated path including head splitting.
    """

    def test_identity_weights_symmetric_tokens(self):
        config = micro_config()
        params = blank_params(config)
        params.token_embedding[3] = (1.0, 0.0)
        params.token_embedding[4] = (0.0, 1.0)
        eye = ((1.0, 0.0), (0.0, 1.0))
        layer = params.layers[0]
        for name in ("w_q", "w_k", "w_v", "w_o", "w_ff1", "w_ff2"):
            getattr(layer, name)[:] = eye
        layer.ln1_gamma[:] = 1.0
        layer.ln2_gamma[:] = 1.0

        hidden, cache = encoder_forward(np.array([3, 4]), params, config)

        # Rows of x0 are the unit vectors, so every projection is x0 itself
        # and the score matrix is the identity scaled by 1/sqrt(head_dim).
        s = 1.0 / math.sqrt(2.0)
        a, b = pair_softmax(s, 0.0)
        np.testing.assert_allclose(cache.layers[0]["attn"][0],
                                   [[a, b], [b, a]], rtol=0, atol=1e-12)
        # Residual row 0 is [1 + a, b] with mean exactly 1, so the first
        # layer norm gives [t, -t] with t pulled slightly below 1 by eps.
        t = a / math.sqrt(a * a + 1e-12)
        np.testing.assert_allclose(cache.layers[0]["x1"],
                                   [[t, -t], [-t, t]], rtol=0, atol=1e-12)
        u0, u1 = t + scalar_gelu(t), -t + scalar_gelu(-t)
        expected = scalar_layer_norm((u0, u1), (1.0, 1.0), (0.0, 0.0))
        np.testing.assert_allclose(hidden, expected, rtol=0, atol=1e-12)
        np.testing.assert_allclose(
            hidden, (0.99999999999977773, -0.99999999999977773),
            rtol=0, atol=1e-12)

    def test_general_weights_one_head(self):
        config = micro_config()
        params = blank_params(config)
        params.token_embedding[3] = GEN2["tok"][0]
        params.token_embedding[4] = GEN2["tok"][1]
        params.position_embedding[0] = GEN2["pos"][0]
        params.position_embedding[1] = GEN2["pos"][1]
        install_layer(params, GEN2)

        hidden, cache = encoder_forward(np.array([3, 4]), params, config)

        g = GEN2
        scale = 1.0 / math.sqrt(2.0)
        x0 = tuple(
            tuple(g["tok"][r][j] + g["pos"][r][j] for j in range(2))
            for r in range(2)
        )
        q = tuple(scalar_affine(x0[r], g["w_q"], g["b_q"]) for r in range(2))
        k = tuple(scalar_affine(x0[r], g["w_k"], g["b_k"]) for r in range(2))
        v = tuple(scalar_affine(x0[r], g["w_v"], g["b_v"]) for r in range(2))
        scores = tuple(
            tuple((q[r][0] * k[c][0] + q[r][1] * k[c][1]) * scale
                  for c in range(2))
            for r in range(2)
        )
        attn = tuple(pair_softmax(*scores[r]) for r in range(2))
        np.testing.assert_allclose(cache.layers[0]["attn"][0], attn,
                                   rtol=0, atol=1e-12)
        ctx = tuple(
            tuple(attn[r][0] * v[0][j] + attn[r][1] * v[1][j]
                  for j in range(2))
            for r in range(2)
        )
        np.testing.assert_allclose(cache.layers[0]["context"], ctx,
                                   rtol=0, atol=1e-12)
        ao = scalar_affine(ctx[0], g["w_o"], g["b_o"])
        x1 = scalar_layer_norm(
            (x0[0][0] + ao[0], x0[0][1] + ao[1]),
            g["ln1_gamma"], g["ln1_beta"])
        np.testing.assert_allclose(cache.layers[0]["x1"][0], x1,
                                   rtol=0, atol=1e-12)
        f1 = scalar_affine(x1, g["w_ff1"], g["b_ff1"])
        np.testing.assert_allclose(cache.layers[0]["f1"][0], f1,
                                   rtol=0, atol=1e-12)
        gel = tuple(scalar_gelu(val) for val in f1)
        np.testing.assert_allclose(cache.layers[0]["g"][0], gel,
                                   rtol=0, atol=1e-12)
        f2 = scalar_affine(gel, g["w_ff2"], g["b_ff2"])
        expected = scalar_layer_norm(
            (x1[0] + f2[0], x1[1] + f2[1]), g["ln2_gamma"], g["ln2_beta"])
        np.testing.assert_allclose(hidden, expected, rtol=0, atol=1e-12)
        np.testing.assert_allclose(
            hidden, (1.9999999999994793, -0.6999999999997395),
            rtol=0, atol=1e-12)

    def test_two_heads_split_component_ranges(self):
        config = micro_config(vocab_size=8, hidden_dim=4, num_heads=2,
                              ff_dim=3)
        params = blank_params(config)
        params.token_embedding[5] = HEADS4["tok"][0]
        params.token_embedding[6] = HEADS4["tok"][1]
        params.position_embedding[0] = HEADS4["pos"][0]
        params.position_embedding[1] = HEADS4["pos"][1]
        install_layer(params, HEADS4)

        hidden, cache = encoder_forward(np.array([5, 6]), params, config)

        g = HEADS4
        scale = 1.0 / math.sqrt(2.0)  # head width 2
        x0 = tuple(
            tuple(g["tok"][r][j] + g["pos"][r][j] for j in range(4))
            for r in range(2)
        )
        q = tuple(scalar_affine(x0[r], g["w_q"], g["b_q"]) for r in range(2))
        k = tuple(scalar_affine(x0[r], g["w_k"], g["b_k"]) for r in range(2))
        v = tuple(scalar_affine(x0[r], g["w_v"], g["b_v"]) for r in range(2))
        ctx = [[0.0] * 4, [0.0] * 4]
        for h, cols in enumerate(((0, 1), (2, 3))):
            for r in range(2):
                row_scores = tuple(
                    math.fsum(q[r][c] * k[key][c] for c in cols) * scale
                    for key in range(2)
                )
                probs = pair_softmax(*row_scores)
                np.testing.assert_allclose(cache.layers[0]["attn"][h, r],
                                           probs, rtol=0, atol=1e-12)
                for c in cols:
                    ctx[r][c] = probs[0] * v[0][c] + probs[1] * v[1][c]
        np.testing.assert_allclose(cache.layers[0]["context"], ctx,
                                   rtol=0, atol=1e-12)
        ao = scalar_affine(tuple(ctx[0]), g["w_o"], g["b_o"])
        x1 = scalar_layer_norm(
            tuple(x0[0][j] + ao[j] for j in range(4)),
            g["ln1_gamma"], g["ln1_beta"])
        f1 = scalar_affine(x1, g["w_ff1"], g["b_ff1"])
        gel = tuple(scalar_gelu(val) for val in f1)
        f2 = scalar_affine(gel, g["w_ff2"], g["b_ff2"])
        expected = scalar_layer_norm(
            tuple(x1[j] + f2[j] for j in range(4)),
            g["ln2_gamma"], g["ln2_beta"])
        np.testing.assert_allclose(hidden, expected, rtol=0, atol=1e-12)
        np.testing.assert_allclose(
            hidden,
            (0.38289329617711032, 0.37856512582755403,
             -1.0663031648339971, 0.68271007020800567),
            rtol=0, atol=1e-12)


@pytest.fixture(scope="module")
def forward_setup():
    config = EncoderConfig(vocab_size=30, num_layers=2, hidden_dim=8,
                           num_heads=2, max_seq_len=6, dropout=0.5, seed=1)
    params = randomized_params(config, seed=9)
    vocab = build_encoder_vocab(["ash", "oak", "elm", "fir", "yew"] * 3, 30)
    return config, params, vocab


@pytest.fixture(scope="module")
def backward_setup():
    config = EncoderConfig(vocab_size=12, num_layers=1, hidden_dim=4,
                           num_heads=2, ff_dim=8, max_seq_len=8,
                           dropout=0.0, seed=3)
    params = randomized_params(config, seed=7)
    ids = np.array([CLS_ID, 5, 9, 3])
    return config, params, ids


class TestForwardBehavior:
    def test_output_is_one_hidden_vector(self, forward_setup):
        config, params, vocab = forward_setup
        hidden = encode(["ash", "oak"], vocab, params, config)
        assert hidden.shape == (config.hidden_dim,)
        assert hidden.dtype == np.float64

    def test_eval_mode_is_deterministic(self, forward_setup):
        config, params, vocab = forward_setup
        first = encode(["ash", "oak", "elm"], vocab, params, config)
        second = encode(["ash", "oak", "elm"], vocab, params, config)
        np.testing.assert_array_equal(first, second)

    def test_empty_token_list_encodes_cls_alone(self, forward_setup):
        config, params, vocab = forward_setup
        hidden = encode([], vocab, params, config)
        direct, _ = encoder_forward(np.array([CLS_ID]), params, config)
        np.testing.assert_array_equal(hidden, direct)

    def test_tokens_beyond_max_seq_len_are_ignored(self, forward_setup):
        config, params, vocab = forward_setup
        long = ["ash", "oak", "elm", "fir", "yew", "ash", "oak", "elm"]
        kept = long[:config.max_seq_len - 1]
        np.testing.assert_array_equal(
            encode(long, vocab, params, config),
            encode(kept, vocab, params, config))

    def test_position_embeddings_distinguish_token_order(self, forward_setup):
        config, params, vocab = forward_setup
        forward = encode(["ash", "oak"], vocab, params, config)
        reverse = encode(["oak", "ash"], vocab, params, config)
        assert np.abs(forward - reverse).max() > 1e-6

    def test_attention_rows_are_probability_distributions(self, forward_setup):
        config, params, _ = forward_setup
        ids = np.array([CLS_ID, 4, 9, 17, 3, 25])
        _, cache = encoder_forward(ids, params, config)
        for layer_cache in cache.layers:
            attn = layer_cache["attn"]
            assert attn.shape == (config.num_heads, len(ids), len(ids))
            assert np.all(attn >= 0.0)
            np.testing.assert_allclose(attn.sum(axis=-1), 1.0,
                                       rtol=0, atol=1e-6)

    def test_train_mode_with_dropout_requires_rng(self, forward_setup):
        config, params, vocab = forward_setup
        with pytest.raises(ValueError):
            encode(["ash"], vocab, params, config, mode="train")

    def test_unknown_mode_rejected(self, forward_setup):
        config, params, vocab = forward_setup
        with pytest.raises(ValueError):
            encode(["ash"], vocab, params, config, mode="test")

    def test_dropout_perturbs_train_mode_only(self, forward_setup):
        config, params, vocab = forward_setup
        tokens = ["ash", "oak", "elm"]
        evaled = encode(tokens, vocab, params, config)
        trained = encode(tokens, vocab, params, config, mode="train",
                         rng=np.random.default_rng(0))
        assert np.abs(evaled - trained).max() > 1e-9
        again = encode(tokens, vocab, params, config, mode="train",
                       rng=np.random.default_rng(0))
        np.testing.assert_array_equal(trained, again)

    def test_zero_dropout_makes_train_equal_eval(self, forward_setup):
        _, params, vocab = forward_setup
        config = EncoderConfig(vocab_size=30, num_layers=2, hidden_dim=8,
                               num_heads=2, max_seq_len=6, dropout=0.0,
                               seed=1)
        tokens = ["ash", "oak"]
        np.testing.assert_array_equal(
            encode(tokens, vocab, params, config),
            encode(tokens, vocab, params, config, mode="train",
                   rng=np.random.default_rng(3)))


class TestBackward:
    def test_requires_cache(self):
        with pytest.raises(ValueError):
            encode_backward(np.zeros(4), None)

    def test_zero_upstream_gradient_gives_zero_grads(self, backward_setup):
        config, params, ids = backward_setup
        _, cache = encoder_forward(ids, params, config)
        grads = encode_backward(np.zeros(config.hidden_dim), cache)
        for name, arr in grads.items():
            assert not arr.any(), name

    def test_accumulates_into_provided_grads(self, backward_setup):
        config, params, ids = backward_setup
        probe = np.random.default_rng(2).normal(size=config.hidden_dim)
        _, cache = encoder_forward(ids, params, config)
        single = encode_backward(probe, cache)
        double = encode_backward(probe, cache,
                                 grads=encode_backward(probe, cache))
        for name, arr in single.items():
            np.testing.assert_array_equal(double[name], 2.0 * arr, err_msg=name)

    def test_only_visited_embedding_rows_get_gradient(self, backward_setup):
        config, params, ids = backward_setup
        probe = np.random.default_rng(2).normal(size=config.hidden_dim)
        _, cache = encoder_forward(ids, params, config)
        grads = encode_backward(probe, cache)
        used = set(ids.tolist())
        for row in range(config.vocab_size):
            touched = bool(np.abs(grads["token_embedding"][row]).max() > 0)
            assert touched == (row in used), row
        pos = grads["position_embedding"]
        assert np.abs(pos[:len(ids)]).max() > 0
        assert not pos[len(ids):].any()

    def test_matches_finite_differences_everywhere(self, backward_setup):
        """Central differences over every parameter coordinate."""
        config, params, ids = backward_setup
        rng = np.random.default_rng(4)
        probe = rng.normal(size=config.hidden_dim)

        def loss() -> float:
            hidden, _ = encoder_forward(ids, params, config)
            return float(probe @ hidden)

        _, cache = encoder_forward(ids, params, config)
        grads = encode_backward(probe, cache)
        step = 1e-5
        worst = 0.0
        for name, arr in params.named_arrays():
            grad = grads[name]
            for idx in np.ndindex(arr.shape):
                orig = arr[idx]
                arr[idx] = orig + step
                up = loss()
                arr[idx] = orig - step
                down = loss()
                arr[idx] = orig
                fd = (up - down) / (2.0 * step)
                # The guard floor absorbs finite-difference noise on
                # coordinates whose true gradient is (near) zero, e.g. key
                # biases, which shift every attention score row uniformly.
                rel = abs(fd - grad[idx]) / max(abs(fd), abs(grad[idx]), 1e-5)
                worst = max(worst, rel)
        assert worst < 1e-4
