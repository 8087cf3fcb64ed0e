"""Simulated side-channel classifier for the modulus event.

Answers are ``+1`` (modulus detected) or ``-1`` (no modulus).  Only the
true modulus flag is consulted; the classifier's quality is summarised by
its true-positive rate (modulus rounds labelled ``+1``) and true-negative
rate (no-modulus rounds labelled ``-1``).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MOD = 1
NO_MOD = -1


@dataclass(frozen=True)
class FaultyOracleConfig:
    tpr: float = 1.0
    tnr: float = 1.0

    def __post_init__(self):
        for name in ("tpr", "tnr"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {v}")

    @classmethod
    def symmetric(cls, accuracy: float) -> "FaultyOracleConfig":
        return cls(accuracy, accuracy)

    @property
    def type1_error(self) -> float:
        return 1.0 - self.tpr

    @property
    def type2_error(self) -> float:
        return 1.0 - self.tnr


def query(config: FaultyOracleConfig, truth: bool, rng: np.random.Generator) -> int:
    u = rng.random()
    if truth:
        return MOD if u < config.tpr else NO_MOD
    return NO_MOD if u < config.tnr else MOD


def query_many(config: FaultyOracleConfig, truth: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Vectorised :func:`query`; consumes one uniform per entry of ``truth``.

    Element ``i`` equals ``query(config, truth[i], rng)`` had the same
    uniforms been drawn one at a time.
    """
    truth = np.asarray(truth, dtype=bool)
    u = rng.random(truth.shape)
    return np.where(truth, np.where(u < config.tpr, MOD, NO_MOD), np.where(u < config.tnr, NO_MOD, MOD))
