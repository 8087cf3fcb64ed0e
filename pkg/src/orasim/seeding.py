"""Deterministic per-task random streams.

Every simulated run draws from a generator keyed by ``(base_seed, *key)``,
so results do not depend on the order or process in which tasks execute.
"""

from __future__ import annotations

import numpy as np

# stream domains; keep values stable, they are part of the reproducibility contract
SCHEME = 0
ORACLE = 1
PASSGRIDS = 2
MOD10 = 3


def stream(base_seed: int, *key: int) -> np.random.Generator:
    if base_seed < 0:
        raise ValueError("seed must be non-negative")
    ss = np.random.SeedSequence(entropy=int(base_seed), spawn_key=tuple(int(k) for k in key))
    return np.random.default_rng(ss)
