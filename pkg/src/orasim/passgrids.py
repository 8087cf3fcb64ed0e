"""PassGrids PGx+4 and the candidate-penalisation attack.

A challenge assigns a digit to each of 36 grid locations.  Each of the four
secret tuples ``(loc, x, y)`` answers ``(digit[loc] * x + y) mod 10``.  The
attacker keeps one score per candidate tuple (36 * 9 * 10 of them) for each
secret position.  A candidate that predicts the wrong digit loses 10.  One
that predicts the right digit but disagrees with the oracle's modulus verdict
loses 3.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import seeding
from .oracle import MOD, NO_MOD, FaultyOracleConfig, query_many

N_LOCATIONS = 36
MULTIPLIERS = range(1, 10)
OFFSETS = range(10)
N_CANDIDATES = N_LOCATIONS * len(MULTIPLIERS) * len(OFFSETS)
SECRET_LENGTH = 4

# candidate c <-> (loc, x, y) in lexicographic order
CAND_LOC, CAND_X, CAND_Y = (
    a.ravel()
    for a in np.meshgrid(np.arange(N_LOCATIONS), np.arange(1, 10), np.arange(10), indexing="ij")
)


@dataclass(frozen=True)
class PGSecretTuple:
    loc: int
    x: int
    y: int

    def __post_init__(self):
        if not 0 <= self.loc < N_LOCATIONS:
            raise ValueError(f"loc must lie in [0, {N_LOCATIONS}), got {self.loc}")
        if self.x not in MULTIPLIERS:
            raise ValueError(f"x must lie in [1, 9], got {self.x}")
        if self.y not in OFFSETS:
            raise ValueError(f"y must lie in [0, 9], got {self.y}")

    @property
    def index(self) -> int:
        return (self.loc * 9 + self.x - 1) * 10 + self.y

    @classmethod
    def from_index(cls, c: int) -> "PGSecretTuple":
        return cls(int(CAND_LOC[c]), int(CAND_X[c]), int(CAND_Y[c]))


@dataclass(frozen=True)
class PGChallenge:
    digits: tuple[int, ...]

    def __post_init__(self):
        digits = tuple(int(v) for v in self.digits)
        object.__setattr__(self, "digits", digits)
        if len(digits) != N_LOCATIONS:
            raise ValueError(f"a challenge has {N_LOCATIONS} digits, got {len(digits)}")
        counts = np.bincount(digits, minlength=10)
        if len(counts) > 10 or counts.min() < 3 or counts.max() > 4 or (counts == 4).sum() != 6:
            raise ValueError("every digit must occur 3 or 4 times, six of them 4 times")


def sample_pg_challenge(rng: np.random.Generator) -> PGChallenge:
    heavy = rng.choice(10, 6, replace=False)
    pool = np.repeat(np.arange(10), 3)
    return PGChallenge(tuple(rng.permutation(np.concatenate([pool, heavy]))))


def random_pg_secret(rng: np.random.Generator, length: int = SECRET_LENGTH) -> tuple[PGSecretTuple, ...]:
    picks = rng.choice(N_CANDIDATES, length, replace=False)
    return tuple(PGSecretTuple.from_index(int(c)) for c in picks)


def pg_respond(secret: PGSecretTuple, challenge: PGChallenge) -> tuple[int, bool]:
    raw = challenge.digits[secret.loc] * secret.x + secret.y
    return raw % 10, raw >= 10


def candidate_raw(challenge: PGChallenge | np.ndarray) -> np.ndarray:
    """Unreduced ``digit * x + y`` for every candidate tuple."""
    digits = np.asarray(challenge.digits if isinstance(challenge, PGChallenge) else challenge)
    return digits[CAND_LOC] * CAND_X + CAND_Y


@dataclass
class PGCandidateBoard:
    scores: np.ndarray
    rounds_seen: int = 0

    @classmethod
    def fresh(cls) -> "PGCandidateBoard":
        return cls(np.zeros(N_CANDIDATES, dtype=np.int64))

    def unique_top(self) -> int | None:
        best = int(np.argmax(self.scores))
        if (self.scores == self.scores[best]).sum() > 1:
            return None
        return best


def _penalties(raw, response, answer, mismatch, disagree):
    consistent = raw % 10 == response
    wrong_mod = np.where(answer == NO_MOD, raw >= 10, raw < 10)
    return np.where(consistent, np.where(wrong_mod, disagree, 0), mismatch)


def pg_attack_round(
    board: PGCandidateBoard,
    challenge: PGChallenge,
    response: int,
    oracle_answer: int,
    penalties: tuple[int, int] = (10, 3),
) -> PGCandidateBoard:
    mismatch, disagree = penalties
    raw = candidate_raw(challenge)
    return PGCandidateBoard(
        board.scores - _penalties(raw, response, oracle_answer, mismatch, disagree),
        board.rounds_seen + 1,
    )


def pg_eliminate(alive: np.ndarray, challenge: PGChallenge, response: int, truth: bool) -> np.ndarray:
    """Hard pruning with an error-free oracle: keep candidates matching digit and modulus status."""
    raw = candidate_raw(challenge)
    return alive & (raw % 10 == response) & ((raw >= 10) == truth)


@dataclass
class RecoveryResult:
    """Observations needed per trial (``None`` = censored) and its empirical CDF."""

    label: str
    counts: list[int | None]

    @property
    def censored(self) -> int:
        return sum(c is None for c in self.counts)

    @property
    def mean(self) -> float:
        done = [c for c in self.counts if c is not None]
        return float(np.mean(done)) if done else float("nan")

    @property
    def median(self) -> float:
        # censored trials sort last
        big = np.array([np.inf if c is None else c for c in self.counts])
        return float(np.median(big))

    def cdf(self, upto: int | None = None) -> list[tuple[int, float]]:
        done = np.array([c for c in self.counts if c is not None], dtype=np.int64)
        top = upto if upto is not None else (int(done.max()) if len(done) else 0)
        total = len(self.counts)
        return [(m, float((done <= m).sum()) / total) for m in range(1, top + 1)]


def _pg_trial(oracle, max_obs, base_seed, trial, length, elimination, penalties):
    scheme_rng = seeding.stream(base_seed, seeding.PASSGRIDS, trial, 0)
    oracle_rng = seeding.stream(base_seed, seeding.PASSGRIDS, trial, 1)
    secret = random_pg_secret(scheme_rng, length)
    true_idx = np.array([s.index for s in secret])
    mismatch, disagree = penalties
    scores = np.zeros((length, N_CANDIDATES), dtype=np.int64)
    alive = np.ones((length, N_CANDIDATES), dtype=bool)
    for obs in range(1, max_obs + 1):
        challenge = sample_pg_challenge(scheme_rng)
        raw = candidate_raw(challenge)
        true_raw = raw[true_idx]
        responses, truths = true_raw % 10, true_raw >= 10
        answers = query_many(oracle, truths, oracle_rng)
        if elimination:
            alive &= (raw % 10 == responses[:, None]) & ((raw >= 10) == truths[:, None])
            if (alive.sum(axis=1) == 1).all():
                return obs
            continue
        for p in range(length):
            scores[p] -= _penalties(raw, responses[p], answers[p], mismatch, disagree)
        best = scores[np.arange(length), true_idx]
        ties = (scores >= best[:, None]).sum(axis=1)
        if (ties == 1).all():
            return obs
    return None


def pg_run(
    oracle: FaultyOracleConfig,
    trials: int,
    max_obs: int = 1000,
    base_seed: int = 0,
    *,
    length: int = SECRET_LENGTH,
    elimination: bool = False,
    penalties: tuple[int, int] = (10, 3),
) -> RecoveryResult:
    """Observations until every secret tuple is the unique best candidate.

    All four positions share each challenge grid and are scored every
    observation until the whole secret is exposed.  Trial ``t`` uses the same
    secret and challenges for any oracle, so CDFs for different accuracies
    are directly comparable.  ``elimination=True`` replaces scoring by hard
    pruning with the true modulus flags and ignores ``oracle``.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not penalties[0] > penalties[1] > 0:
        raise ValueError("penalties must satisfy mismatch > disagreement > 0")
    counts = [
        _pg_trial(oracle, max_obs, base_seed, t, length, elimination, penalties) for t in range(trials)
    ]
    label = "elimination" if elimination else f"{oracle.tpr:g}"
    return RecoveryResult(label, counts)


__all__ = [
    "MOD",
    "NO_MOD",
    "N_CANDIDATES",
    "PGSecretTuple",
    "PGChallenge",
    "PGCandidateBoard",
    "RecoveryResult",
    "sample_pg_challenge",
    "random_pg_secret",
    "pg_respond",
    "candidate_raw",
    "pg_attack_round",
    "pg_eliminate",
    "pg_run",
]
