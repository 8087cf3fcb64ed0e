import numpy as np
import pytest

from orasim.oracle import MOD, NO_MOD, FaultyOracleConfig
from orasim.passgrids import (
    N_CANDIDATES,
    PGCandidateBoard,
    PGChallenge,
    PGSecretTuple,
    candidate_raw,
    pg_attack_round,
    pg_eliminate,
    pg_respond,
    pg_run,
    random_pg_secret,
    sample_pg_challenge,
)


def grid(loc_digit):
    """A valid challenge whose location 0 shows ``loc_digit``."""
    digits = [d for d in range(10) for _ in range(3)] + list(range(6))
    i = digits.index(loc_digit)
    digits[0], digits[i] = digits[i], digits[0]
    return PGChallenge(tuple(digits))


def test_candidate_space():
    assert N_CANDIDATES == 3240
    seen = {(PGSecretTuple.from_index(c).loc, PGSecretTuple.from_index(c).x, PGSecretTuple.from_index(c).y)
            for c in range(N_CANDIDATES)}
    assert len(seen) == 3240
    assert all(PGSecretTuple.from_index(c).index == c for c in range(0, 3240, 7))


def test_tuple_ranges():
    for bad in [(36, 1, 0), (0, 0, 0), (0, 10, 0), (0, 1, 10)]:
        with pytest.raises(ValueError):
            PGSecretTuple(*bad)


def test_challenge_multiset_rules(rng):
    for _ in range(200):
        ch = sample_pg_challenge(rng)
        counts = np.bincount(ch.digits, minlength=10)
        assert set(counts) <= {3, 4} and (counts == 4).sum() == 6
    with pytest.raises(ValueError):
        PGChallenge(tuple([0] * 36))
    with pytest.raises(ValueError):
        PGChallenge(tuple(range(10)) * 3)


def test_examples():
    assert pg_respond(PGSecretTuple(0, 5, 7), grid(0)) == (7, False)
    assert pg_respond(PGSecretTuple(0, 4, 1), grid(3)) == (3, True)


def test_exhaustive_response_rule():
    for digit in range(10):
        ch = grid(digit)
        for x in range(1, 10):
            for y in range(10):
                r, wrapped = pg_respond(PGSecretTuple(0, x, y), ch)
                assert r == (digit * x + y) % 10 and wrapped == (digit * x + y >= 10)


def test_candidate_raw_agrees_with_respond(rng):
    ch = sample_pg_challenge(rng)
    raw = candidate_raw(ch)
    for c in rng.choice(N_CANDIDATES, 50, replace=False):
        r, wrapped = pg_respond(PGSecretTuple.from_index(int(c)), ch)
        assert raw[c] % 10 == r and (raw[c] >= 10) == wrapped


def test_penalty_rules():
    ch = grid(3)
    secret = PGSecretTuple(0, 4, 1)  # raw 13
    r, _ = pg_respond(secret, ch)
    board = pg_attack_round(PGCandidateBoard.fresh(), ch, r, MOD)
    assert board.scores[secret.index] == 0
    mismatch = PGSecretTuple(0, 4, 2)
    assert board.scores[mismatch.index] == -10
    # same response without wrap: raw 3 from x=1, y=0
    no_wrap = PGSecretTuple(0, 1, 0)
    assert board.scores[no_wrap.index] == -3
    board = pg_attack_round(PGCandidateBoard.fresh(), ch, r, NO_MOD)
    assert board.scores[secret.index] == -3 and board.scores[no_wrap.index] == 0


def test_scores_never_increase_and_secret_never_mismatched(rng):
    secret = random_pg_secret(rng)[0]
    board = PGCandidateBoard.fresh()
    for _ in range(20):
        ch = sample_pg_challenge(rng)
        r, _ = pg_respond(secret, ch)
        new = pg_attack_round(board, ch, r, MOD if rng.random() < 0.5 else NO_MOD)
        assert (new.scores <= board.scores).all()
        assert board.scores[secret.index] - new.scores[secret.index] in (0, 3)
        board = new


def test_elimination_keeps_secret_and_shrinks(rng):
    secret = random_pg_secret(rng)[0]
    alive = np.ones(N_CANDIDATES, bool)
    sizes = []
    for _ in range(10):
        ch = sample_pg_challenge(rng)
        r, wrapped = pg_respond(secret, ch)
        alive = pg_eliminate(alive, ch, r, wrapped)
        assert alive[secret.index]
        sizes.append(alive.sum())
    assert all(b <= a for a, b in zip(sizes, sizes[1:]))


def test_secret_tuples_distinct(rng):
    for _ in range(100):
        s = random_pg_secret(rng)
        assert len({t.index for t in s}) == 4


def test_run_is_deterministic_and_validates():
    a = pg_run(FaultyOracleConfig(), 20, base_seed=3)
    b = pg_run(FaultyOracleConfig(), 20, base_seed=3)
    assert a.counts == b.counts and a.censored == 0
    with pytest.raises(ValueError):
        pg_run(FaultyOracleConfig(), 0)
    with pytest.raises(ValueError):
        pg_run(FaultyOracleConfig(), 5, penalties=(3, 3))


def test_censoring():
    res = pg_run(FaultyOracleConfig.symmetric(0.5), 5, max_obs=1)
    assert res.censored == 5 and res.cdf(3) == [(1, 0.0), (2, 0.0), (3, 0.0)]


def test_penalty_magnitudes_equivalent_under_perfect_oracle():
    a = pg_run(FaultyOracleConfig(), 300, base_seed=8)
    b = pg_run(FaultyOracleConfig(), 300, base_seed=8, penalties=(5, 1))
    assert a.counts == b.counts


def test_perfect_scoring_matches_elimination():
    a = pg_run(FaultyOracleConfig(), 200, base_seed=4)
    b = pg_run(FaultyOracleConfig(), 200, base_seed=4, elimination=True)
    assert a.counts == b.counts


def test_median_regression_baseline():
    # golden value from this implementation, seed 0, 1000 trials
    assert pg_run(FaultyOracleConfig(), 1000, base_seed=0).median == 5.0
