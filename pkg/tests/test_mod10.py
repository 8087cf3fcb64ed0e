import numpy as np
import pytest

from orasim.mod10 import DigitBoard, consistent_digits, mod10_respond, mod10_round, mod10_run
from orasim.oracle import MOD, NO_MOD, FaultyOracleConfig


def test_reward_examples():
    board = mod10_round(DigitBoard.zeros(), 5, NO_MOD)
    assert list(board.points) == [1] * 6 + [0] * 4
    board = mod10_round(DigitBoard.zeros(), 9, NO_MOD)
    assert list(board.points) == [1] * 10
    board = mod10_round(DigitBoard.zeros(), 5, MOD)
    assert list(board.points) == [0] * 6 + [1] * 4
    assert board.rounds_seen == 1


def test_partition_identity():
    for s in range(10):
        for o in range(10):
            rnd = mod10_respond(s, o)
            assert rnd.response == (s + o) % 10 and rnd.modulus_truth == (s + o >= 10)
            assert consistent_digits(rnd.response, rnd.modulus_truth)[s]
    for r in range(10):
        assert list(np.flatnonzero(consistent_digits(r, False))) == list(range(r + 1))
        assert list(np.flatnonzero(consistent_digits(r, True))) == list(range(r + 1, 10))


def test_points_nondecreasing_and_truth_always_rewarded(rng):
    s = 7
    board = DigitBoard.zeros()
    for _ in range(10_000):
        rnd = mod10_respond(s, int(rng.integers(10)))
        new = mod10_round(board, rnd.response, MOD if rnd.modulus_truth else NO_MOD)
        assert (new.points >= board.points).all()
        assert new.points[s] == board.points[s] + 1
        board = new
    others = np.delete(board.points, s)
    assert (others < board.points[s]).all()
    assert board.unique_top() == s


def test_transcript_alone_is_uniform(rng):
    # a one-time pad hides the digit: responses are uniform for every secret
    for s in range(10):
        counts = np.bincount([mod10_respond(s, int(o)).response for o in rng.integers(0, 10, 5000)], minlength=10)
        chi2 = ((counts - 500) ** 2 / 500).sum()
        assert chi2 < 27.88  # 99.9% quantile, 9 dof


def test_run_deterministic_and_censors():
    a = mod10_run(FaultyOracleConfig(), 50, base_seed=2)
    b = mod10_run(FaultyOracleConfig(), 50, base_seed=2)
    assert a.counts == b.counts and a.censored == 0
    c = mod10_run(FaultyOracleConfig.symmetric(0.5), 5, max_rounds=30)
    assert c.censored == 5
    with pytest.raises(ValueError):
        mod10_run(FaultyOracleConfig(), 0)


def test_longer_pins_take_longer():
    short = mod10_run(FaultyOracleConfig(), 300, pin_length=1, base_seed=1).mean
    long = mod10_run(FaultyOracleConfig(), 300, pin_length=6, base_seed=1).mean
    assert short < long
