import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from orasim.bias import prob_g
from orasim.schemes import (
    PRESETS,
    Challenge,
    SchemeKind,
    SchemeParams,
    Secret,
    preset,
    random_secret,
    respond,
    rounds_per_session,
    sample_challenge,
    simulate_rounds,
)


def test_presets():
    assert (preset("bc").n, preset("bc").k, preset("bc").l, preset("bc").d) == (180, 14, 30, 5)
    assert preset("FT").d == 4 and preset("ft").kind is SchemeKind.FT
    assert preset("hb").eta == 0.2 and preset("hb").d == 2
    with pytest.raises(KeyError):
        preset("xx")


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(n=10, k=11, l=3, d=2),
        dict(n=10, k=3, l=0, d=2),
        dict(n=10, k=3, l=4, d=1),
        dict(n=10, k=3, l=4, d=3, kind="hb"),
        dict(n=10, k=3, l=4, d=2, kind="hb", eta=0.5),
        dict(n=10, k=3, l=4, d=5, kind="ft"),
    ],
)
def test_invalid_params_rejected(kwargs):
    with pytest.raises(ValueError):
        SchemeParams(**kwargs)


def test_violations_lists_every_problem():
    with pytest.raises(ValueError, match="k must.*; d must"):
        SchemeParams(5, 9, 3, 1)


def test_secret_validation():
    with pytest.raises(ValueError):
        Secret((3, 1))
    with pytest.raises(ValueError):
        Secret((1, 2)).validate(SchemeParams(8, 3, 4, 4))
    with pytest.raises(ValueError):
        Secret((1, 2, 8)).validate(SchemeParams(8, 3, 4, 4))


def test_worked_example():
    # pool of 8, secret {1, 2, 6}; the window shows items 2, 3, 6, 7 with weights 1, 0, 3, 2
    params = SchemeParams(8, 3, 4, 4)
    rec = respond(params, Secret((1, 2, 6)), Challenge((2, 3, 6, 7), (1, 0, 3, 2)), np.random.default_rng(0))
    assert rec.response == 0
    assert rec.g == 2 and rec.raw_sum == 4 and rec.modulus_truth


def test_ft_threshold_map():
    params = SchemeParams(8, 2, 2, 4, "ft")
    secret = Secret((0, 1))
    rng = np.random.default_rng(0)
    for w0 in range(4):
        for w1 in range(4):
            rec = respond(params, secret, Challenge((0, 1), (w0, w1)), rng)
            assert rec.response == int((w0 + w1) % 4 >= 2)
            assert rec.modulus_truth == (w0 + w1 >= 4)
    empty = respond(params, secret, Challenge((2, 3), (3, 3)), rng)
    assert empty.response == 0 and empty.g == 0 and not empty.modulus_truth


def test_hb_empty_window_never_flipped():
    params = SchemeParams(8, 2, 2, 2, "hb", eta=0.49)
    rng = np.random.default_rng(1)
    recs = [respond(params, Secret((0, 1)), Challenge((2, 3), (1, 1)), rng) for _ in range(200)]
    assert all(r.response == 0 and not r.flipped for r in recs)


def test_hb_flip_rate():
    params = SchemeParams(8, 2, 2, 2, "hb", eta=0.2)
    rng = np.random.default_rng(2)
    recs = [respond(params, Secret((0, 1)), Challenge((0, 1), (1, 0)), rng) for _ in range(20000)]
    flips = np.mean([r.flipped for r in recs])
    assert abs(flips - 0.2) < 3 * math.sqrt(0.2 * 0.8 / 20000) + 1e-9
    assert all(r.response == (1 ^ int(r.flipped)) for r in recs)


def test_bc_empty_response_uniform():
    params = SchemeParams(10, 1, 3, 5)
    rng = np.random.default_rng(3)
    counts = np.zeros(5)
    for _ in range(5000):
        counts[respond(params, Secret((0,)), Challenge((1, 2, 3), (4, 4, 4)), rng).response] += 1
    chi2 = ((counts - 1000) ** 2 / 1000).sum()
    assert chi2 < 18.47  # 99.9% quantile, 4 degrees of freedom


def test_respond_replays_with_same_seed():
    params = PRESETS["hb"]
    secret = random_secret(params, np.random.default_rng(4))
    ch = sample_challenge(params, np.random.default_rng(5))
    a = respond(params, secret, ch, np.random.default_rng(6))
    b = respond(params, secret, ch, np.random.default_rng(6))
    assert a == b


def test_sample_challenge_uniform_items(rng):
    params = SchemeParams(12, 3, 4, 3)
    counts = np.zeros(12)
    trials = 6000
    for _ in range(trials):
        ch = sample_challenge(params, rng)
        assert len(set(ch.items)) == 4 and all(0 <= w < 3 for w in ch.weights)
        counts[list(ch.items)] += 1
    expected = trials * 4 / 12
    assert (((counts - expected) ** 2) / expected).sum() < 31.26  # 99.9%, 11 dof


@pytest.mark.parametrize("name", ["bc", "ft", "hb"])
def test_batched_rounds_satisfy_scheme_rules(name, rng):
    params = PRESETS[name]
    secret = random_secret(params, rng)
    batch = simulate_rounds(params, secret, 4000, rng)
    mask = secret.mask(params.n)
    for i in range(0, 4000, 97):
        rec = batch.record(i)
        assert rec.g == int(mask[list(rec.challenge.items)].sum())
        replay = respond(params, secret, rec.challenge, np.random.default_rng(0))
        assert rec.raw_sum == replay.raw_sum and rec.g == replay.g
        if params.kind is not SchemeKind.HB and (rec.g > 0 or params.kind is SchemeKind.FT):
            assert rec.response == replay.response
    assert np.array_equal(batch.modulus_truth, batch.raw_sum >= params.d)
    assert ((batch.response >= 0) & (batch.response < params.response_space)).all()
    if params.kind is SchemeKind.BC:
        nz = batch.g > 0
        assert np.array_equal(batch.response[nz], batch.raw_sum[nz] % params.d)
    if params.kind is SchemeKind.FT:
        assert (batch.response[batch.g == 0] == 0).all()
    if params.kind is SchemeKind.HB:
        assert not batch.flipped[batch.g == 0].any()
        assert np.array_equal(batch.response, (batch.raw_sum % 2) ^ batch.flipped)


def test_window_hit_counts_follow_hypergeometric(rng):
    params = PRESETS["bc"]
    secret = random_secret(params, rng)
    trials = 40000
    g = simulate_rounds(params, secret, trials, rng).g
    for value in range(6):
        p = prob_g(value, params)
        freq = np.mean(g == value)
        assert abs(freq - p) <= 3 * math.sqrt(p * (1 - p) / trials) + 1e-4


def test_batch_windows_are_distinct_items(rng):
    params = SchemeParams(20, 3, 20, 3)
    batch = simulate_rounds(params, Secret((0, 1, 2)), 50, rng)
    assert all(len(set(row)) == 20 for row in batch.items)


def test_session_lengths():
    assert rounds_per_session(PRESETS["ft"], 1e-6, p_guess=0.5) == 20
    assert rounds_per_session(PRESETS["hb"], 1e-4) == 34
    # exact guessing probability for bc is 1/5
    assert rounds_per_session(PRESETS["bc"], 1e-6) == 9
    with pytest.raises(ValueError):
        rounds_per_session(PRESETS["bc"], 1.5)


@given(p=st.floats(0.05, 0.95), target=st.floats(1e-9, 0.5))
def test_session_length_is_minimal(p, target):
    m = rounds_per_session(PRESETS["bc"], target, p_guess=p)
    assert p**m <= target
    assert m == 1 or p ** (m - 1) > target


def test_hb_session_tail():
    m = rounds_per_session(PRESETS["hb"], 1e-4)
    tail = lambda m: sum(math.comb(m, w) for w in range(int(0.2 * m) + 1)) / 2**m
    assert tail(m) <= 1e-4 < tail(m - 1)
