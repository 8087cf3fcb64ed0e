import math

import numpy as np
import pytest

from orasim.oracle import MOD, NO_MOD, FaultyOracleConfig, query, query_many


def test_config_bounds():
    with pytest.raises(ValueError):
        FaultyOracleConfig(1.2, 1.0)
    with pytest.raises(ValueError):
        FaultyOracleConfig(1.0, -0.1)
    cfg = FaultyOracleConfig.symmetric(0.9)
    assert cfg.tpr == cfg.tnr == 0.9
    assert cfg.type1_error == pytest.approx(0.1) and cfg.type2_error == pytest.approx(0.1)


def test_perfect_oracle_is_truthful(rng):
    truth = rng.random(1000) < 0.5
    answers = query_many(FaultyOracleConfig(), truth, rng)
    assert np.array_equal(answers == MOD, truth)


def test_always_wrong_oracle(rng):
    cfg = FaultyOracleConfig(0.0, 0.0)
    assert query(cfg, True, rng) == NO_MOD
    assert query(cfg, False, rng) == MOD


@pytest.mark.parametrize("tpr,tnr", [(0.9, 0.6), (0.35, 0.95), (0.5, 0.5)])
def test_error_rates(tpr, tnr, rng):
    cfg = FaultyOracleConfig(tpr, tnr)
    n = 100_000
    pos = query_many(cfg, np.ones(n, bool), rng)
    neg = query_many(cfg, np.zeros(n, bool), rng)
    assert abs(np.mean(pos == MOD) - tpr) < 3 * math.sqrt(tpr * (1 - tpr) / n)
    assert abs(np.mean(neg == NO_MOD) - tnr) < 3 * math.sqrt(tnr * (1 - tnr) / n)


def test_errors_uncorrelated(rng):
    n = 100_000
    cfg = FaultyOracleConfig.symmetric(0.8)
    truth = rng.random(n) < 0.4
    err = ((query_many(cfg, truth, rng) == MOD) != truth).astype(float)
    e = err - err.mean()
    lag1 = (e[:-1] * e[1:]).mean() / e.var()
    assert abs(lag1) < 4 / math.sqrt(n)


def test_scalar_and_vector_agree():
    cfg = FaultyOracleConfig(0.7, 0.6)
    truth = np.random.default_rng(9).random(500) < 0.5
    a = query_many(cfg, truth, np.random.default_rng(10))
    r = np.random.default_rng(10)
    b = [query(cfg, bool(t), r) for t in truth]
    assert list(a) == b


def test_replay():
    cfg = FaultyOracleConfig(0.7, 0.6)
    truth = np.arange(300) % 3 == 0
    assert np.array_equal(query_many(cfg, truth, np.random.default_rng(5)), query_many(cfg, truth, np.random.default_rng(5)))
