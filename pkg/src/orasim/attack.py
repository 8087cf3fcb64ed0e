"""Points-update secret recovery against k-out-of-n schemes.

Each observed round is scored with the oracle's verdict.  On a no-modulus
verdict the unreduced sum is at most the largest value below ``d`` that
the cognitive function maps to the observed response (the response itself
for ``bc`` and ``hb``; 1 or 3 for ``ft``).  Every challenge item heavier than
that ceiling receives ``u[weight]`` points.  On a modulus verdict every challenge item receives
``v[weight]``.  The attack succeeds once the ``k`` best-scored items are
exactly the secret.  Ranking is points descending, item index ascending.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import seeding
from .oracle import NO_MOD, FaultyOracleConfig, query_many
from .schemes import (
    Observation,
    SchemeKind,
    SchemeParams,
    Secret,
    random_secret,
    simulate_rounds,
)

DEFAULT_MAX_ROUNDS = 200_000
_FIRST_BLOCK = 64
_MAX_BLOCK = 1024


@dataclass(frozen=True)
class PenaltyVectors:
    """Per-weight score increments for the no-modulus (``u``) and modulus (``v``) verdicts."""

    u: tuple[int, ...]
    v: tuple[int, ...]

    def __post_init__(self):
        u = tuple(int(x) for x in self.u)
        v = tuple(int(x) for x in self.v)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        if len(u) != len(v):
            raise ValueError("u and v must have the same length")
        if any(x > 0 for x in u):
            raise ValueError("u entries must be non-positive")
        if any(b > a for a, b in zip(u, u[1:])):
            raise ValueError("u must be non-increasing")
        if any(b < a for a, b in zip(v, v[1:])):
            raise ValueError("v must be non-decreasing")

    @classmethod
    def default(cls, d: int) -> "PenaltyVectors":
        # u[0] is never applied: it would need weight 0 > response >= 0
        return cls((-1,) * d, (0,) * d)

    @property
    def d(self) -> int:
        return len(self.u)


@dataclass
class ScoreBoard:
    points: np.ndarray
    rounds_seen: int = 0

    @classmethod
    def zeros(cls, n: int) -> "ScoreBoard":
        return cls(np.zeros(n, dtype=np.int64))

    def ranking(self) -> np.ndarray:
        return np.argsort(-self.points, kind="stable")

    def top(self, k: int) -> frozenset[int]:
        return frozenset(int(i) for i in self.ranking()[:k])


@dataclass(frozen=True)
class AttackOutcome:
    rounds: int | None
    """First round after which the top-k equals the secret; ``None`` if censored."""
    ranking: tuple[int, ...]
    seed: tuple[int, ...] = ()

    @property
    def censored(self) -> bool:
        return self.rounds is None


@dataclass
class ConfidenceTrace:
    """Per-round gaps between adjacent ranks around position ``k``."""

    diff_km1_k: np.ndarray
    diff_k_kp1: np.ndarray
    diff_kp1_kp2: np.ndarray

    def __len__(self):
        return len(self.diff_k_kp1)

    def rows(self):
        for i in range(len(self)):
            yield i + 1, self.diff_km1_k[i], self.diff_k_kp1[i], self.diff_kp1_kp2[i]


def no_mod_ceilings(params: SchemeParams) -> np.ndarray:
    """Largest unreduced sum consistent with each response under no modulus."""
    if params.kind is SchemeKind.FT:
        half = params.d // 2
        return np.array([half - 1, params.d - 1], dtype=np.int64)
    return np.arange(params.response_space, dtype=np.int64)


def attack_round(
    board: ScoreBoard,
    observation: Observation,
    oracle_answer: int,
    penalties: PenaltyVectors,
    params: SchemeParams | None = None,
) -> ScoreBoard:
    """One points update.  Without ``params`` the ceiling is the response itself."""
    points = board.points.copy()
    r = observation.response
    ceiling = r if params is None else int(no_mod_ceilings(params)[r])
    for item, w in observation.challenge.entries:
        if oracle_answer == NO_MOD:
            if w > ceiling:
                points[item] += penalties.u[w]
        else:
            points[item] += penalties.v[w]
    return ScoreBoard(points, board.rounds_seen + 1)


def _block_deltas(batch, answers, u, v, ceilings, n: int) -> np.ndarray:
    w = batch.weights
    no_mod = (answers == NO_MOD)[:, None]
    vals = np.where(no_mod, np.where(w > ceilings[batch.response][:, None], u[w], 0), v[w])
    delta = np.zeros((len(batch), n), dtype=np.int64)
    delta[np.arange(len(batch))[:, None], batch.items] = vals
    return delta


def recovered_rows(cum: np.ndarray, secret_idx: np.ndarray, decoy_idx: np.ndarray) -> np.ndarray:
    """For each row of scores, whether the top-k under the ranking is the secret."""
    s = cum[:, secret_idx]
    low = s.min(axis=1, keepdims=True)
    # the weakest secret that any tied decoy must not precede
    last = np.where(s == low, secret_idx, -1).max(axis=1, keepdims=True)
    dec = cum[:, decoy_idx]
    bad = (dec > low) | ((dec == low) & (decoy_idx < last))
    return ~bad.any(axis=1)


def run_attack(
    params: SchemeParams,
    secret: Secret,
    oracle: FaultyOracleConfig,
    penalties: PenaltyVectors | None = None,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
    rng: np.random.Generator | None = None,
    *,
    oracle_rng: np.random.Generator | None = None,
    record_trace: bool = True,
    stop_at_recovery: bool = True,
    seed: tuple[int, ...] = (),
) -> tuple[AttackOutcome, ConfidenceTrace | None]:
    """Simulate rounds against ``secret`` until the points ranking exposes it.

    ``rng`` drives challenges and responses, ``oracle_rng`` (defaulting to
    ``rng``) the oracle.  With ``stop_at_recovery=False`` all ``max_rounds``
    are played and the outcome still reports the first recovery round.
    """
    if max_rounds < 1:
        raise ValueError("max_rounds must be >= 1")
    penalties = penalties or PenaltyVectors.default(params.d)
    if penalties.d != params.d:
        raise ValueError(f"penalty vectors have length {penalties.d}, scheme modulus is {params.d}")
    secret.validate(params)
    rng = rng if rng is not None else np.random.default_rng()
    oracle_rng = oracle_rng if oracle_rng is not None else rng
    k, n = params.k, params.n
    if record_trace and not 2 <= k <= n - 2:
        raise ValueError("confidence trace needs 2 <= k <= n - 2")

    mask = secret.mask(n)
    secret_idx = np.flatnonzero(mask)
    decoy_idx = np.flatnonzero(~mask)
    u = np.asarray(penalties.u, dtype=np.int64)
    v = np.asarray(penalties.v, dtype=np.int64)
    ceilings = no_mod_ceilings(params)

    points = np.zeros(n, dtype=np.int64)
    traces: list[np.ndarray] = []
    first: int | None = None
    done = 0
    block = _FIRST_BLOCK
    while done < max_rounds:
        size = min(block, max_rounds - done)
        batch = simulate_rounds(params, mask, size, rng)
        answers = query_many(oracle, batch.modulus_truth, oracle_rng)
        cum = points + np.cumsum(_block_deltas(batch, answers, u, v, ceilings, n), axis=0)
        stop = size
        if first is None:
            hits = recovered_rows(cum, secret_idx, decoy_idx)
            if hits.any():
                at = int(np.argmax(hits))
                first = done + at + 1
                if stop_at_recovery:
                    stop = at + 1
        if record_trace:
            ranked = -np.sort(-cum[:stop], axis=1)[:, k - 2 : k + 2]
            traces.append(np.abs(np.diff(ranked, axis=1)))
        points = cum[stop - 1]
        done += stop
        if first is not None and stop_at_recovery:
            break
        block = min(2 * block, _MAX_BLOCK)

    ranking = tuple(int(i) for i in np.argsort(-points, kind="stable"))
    trace = None
    if record_trace:
        t = np.concatenate(traces) if traces else np.zeros((0, 3), dtype=np.int64)
        trace = ConfidenceTrace(t[:, 0], t[:, 1], t[:, 2])
    return AttackOutcome(first, ranking, seed), trace


@dataclass
class SweepCell:
    scheme: str
    tpr: float
    tnr: float
    iterations: int
    mean_rounds: float
    std_rounds: float
    censored: int
    rounds: list[int] = field(default_factory=list, repr=False)


def _one_run(params, oracle, penalties, max_rounds, base_seed, iteration):
    scheme_rng = seeding.stream(base_seed, seeding.SCHEME, iteration)
    oracle_rng = seeding.stream(base_seed, seeding.ORACLE, iteration)
    secret = random_secret(params, scheme_rng)
    outcome, _ = run_attack(
        params, secret, oracle, penalties, max_rounds, scheme_rng,
        oracle_rng=oracle_rng, record_trace=False, seed=(base_seed, iteration),
    )
    return outcome.rounds


def _run_chunk(args):
    params, oracle, penalties, max_rounds, base_seed, iterations = args
    return [_one_run(params, oracle, penalties, max_rounds, base_seed, i) for i in iterations]


def summarize(scheme: str, tpr: float, tnr: float, results: list[int | None]) -> SweepCell:
    done = [r for r in results if r is not None]
    arr = np.asarray(done, dtype=float)
    mean = float(arr.mean()) if len(arr) else float("nan")
    std = float(arr.std(ddof=1)) if len(arr) > 1 else 0.0
    return SweepCell(scheme, tpr, tnr, len(results), mean, std, len(results) - len(done), done)


def sweep(
    params: SchemeParams,
    tpr_grid,
    tnr_grid,
    iterations: int,
    penalties: PenaltyVectors | None = None,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
    base_seed: int = 0,
    threads: int = 1,
) -> list[SweepCell]:
    """Mean rounds-to-recovery for every ``(tpr, tnr)`` pair.

    Iteration ``i`` of every cell attacks the same secret with the same
    challenge sequence (common random numbers); only the oracle verdicts
    differ between cells.  Censored runs are counted, not averaged.
    """
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    tprs, tnrs = list(tpr_grid), list(tnr_grid)
    if not tprs or not tnrs:
        raise ValueError("tpr and tnr grids must be non-empty")
    penalties = penalties or PenaltyVectors.default(params.d)
    cells = [(tpr, tnr) for tpr in tprs for tnr in tnrs]
    nchunks = max(1, min(iterations, 4 * threads)) if threads > 1 else 1
    chunks = [list(range(iterations))[j::nchunks] for j in range(nchunks)]
    tasks = [
        (params, FaultyOracleConfig(tpr, tnr), penalties, max_rounds, base_seed, chunk)
        for tpr, tnr in cells
        for chunk in chunks
    ]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_run_chunk, tasks))
    else:
        parts = [_run_chunk(t) for t in tasks]

    out = []
    for c, (tpr, tnr) in enumerate(cells):
        by_iter: dict[int, int | None] = {}
        for j, chunk in enumerate(chunks):
            by_iter.update(zip(chunk, parts[c * nchunks + j]))
        results = [by_iter[i] for i in range(iterations)]
        out.append(summarize(params.kind.value, tpr, tnr, results))
    return out


def average_trace(
    params: SchemeParams,
    oracle: FaultyOracleConfig,
    runs: int,
    rounds: int,
    penalties: PenaltyVectors | None = None,
    base_seed: int = 0,
) -> ConfidenceTrace:
    """Mean rank gaps over ``runs`` attacks that each play exactly ``rounds`` rounds.

    Run ``i`` uses the same streams as iteration ``i`` of :func:`sweep`.
    """
    if runs < 1:
        raise ValueError("runs must be >= 1")
    total = np.zeros((rounds, 3))
    for i in range(runs):
        scheme_rng = seeding.stream(base_seed, seeding.SCHEME, i)
        oracle_rng = seeding.stream(base_seed, seeding.ORACLE, i)
        secret = random_secret(params, scheme_rng)
        _, trace = run_attack(
            params, secret, oracle, penalties, rounds, scheme_rng,
            oracle_rng=oracle_rng, stop_at_recovery=False, seed=(base_seed, i),
        )
        total += np.column_stack([trace.diff_km1_k, trace.diff_k_kp1, trace.diff_kp1_kp2])
    mean = total / runs
    return ConfidenceTrace(mean[:, 0], mean[:, 1], mean[:, 2])
