"""k-out-of-n challenge-response schemes with modulus-event labelling.

Three cognitive functions are supported, all built on the windowed
dot-product ``Y = sum of weights of secret items in the challenge``:

* ``bc`` -- response ``Y mod d``; a uniformly random response when no
  secret item is present.
* ``ft`` -- ``Y mod d`` mapped to 0 (lower half) or 1 (upper half); 0 when
  no secret item is present.
* ``hb`` -- parity of ``Y`` (``d == 2``), flipped with probability ``eta``;
  0, unflipped, when no secret item is present.

Every round records whether the user had to reduce the sum, i.e. whether
``Y >= d``.  The empty event (no secret item present) counts as
no-modulus.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "SchemeKind",
    "SchemeParams",
    "Secret",
    "Challenge",
    "RoundRecord",
    "Observation",
    "RoundBatch",
    "PRESETS",
    "preset",
    "random_secret",
    "sample_challenge",
    "respond",
    "simulate_rounds",
    "rounds_per_session",
]


class SchemeKind(str, enum.Enum):
    BC = "bc"
    FT = "ft"
    HB = "hb"


@dataclass(frozen=True)
class SchemeParams:
    """Pool size ``n``, secret size ``k``, window ``l``, modulus ``d``."""

    n: int
    k: int
    l: int
    d: int
    kind: SchemeKind = SchemeKind.BC
    eta: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "kind", SchemeKind(self.kind))
        errors = self.violations()
        if errors:
            raise ValueError("; ".join(errors))

    def violations(self) -> list[str]:
        errs = []
        if not 1 <= self.k <= self.n:
            errs.append(f"k must satisfy 1 <= k <= n (k={self.k}, n={self.n})")
        if not 1 <= self.l <= self.n:
            errs.append(f"l must satisfy 1 <= l <= n (l={self.l}, n={self.n})")
        if self.d < 2:
            errs.append(f"d must be >= 2 (d={self.d})")
        if self.kind is SchemeKind.HB:
            if self.d != 2:
                errs.append(f"hb requires d == 2 (d={self.d})")
            if not 0.0 <= self.eta < 0.5:
                errs.append(f"hb requires 0 <= eta < 0.5 (eta={self.eta})")
        if self.kind is SchemeKind.FT and self.d % 2:
            errs.append(f"ft requires an even modulus (d={self.d})")
        return errs

    @property
    def response_space(self) -> int:
        return self.d if self.kind is SchemeKind.BC else 2

    @property
    def max_g(self) -> int:
        return min(self.k, self.l)


PRESETS: dict[str, SchemeParams] = {
    "bc": SchemeParams(180, 14, 30, 5, SchemeKind.BC),
    "ft": SchemeParams(180, 14, 30, 4, SchemeKind.FT),
    "hb": SchemeParams(180, 14, 30, 2, SchemeKind.HB, eta=0.2),
}


def preset(name: str) -> SchemeParams:
    try:
        return PRESETS[name.lower()]
    except KeyError:
        raise KeyError(f"unknown scheme preset {name!r}; choose from {sorted(PRESETS)}") from None


@dataclass(frozen=True)
class Secret:
    items: tuple[int, ...]

    def __post_init__(self):
        items = tuple(int(i) for i in self.items)
        if any(b <= a for a, b in zip(items, items[1:])):
            raise ValueError("secret items must be strictly increasing")
        object.__setattr__(self, "items", items)

    def validate(self, params: SchemeParams) -> None:
        if len(self.items) != params.k:
            raise ValueError(f"secret has {len(self.items)} items, expected k={params.k}")
        if self.items and (self.items[0] < 0 or self.items[-1] >= params.n):
            raise ValueError("secret item index out of range")

    def mask(self, n: int) -> np.ndarray:
        m = np.zeros(n, dtype=bool)
        m[list(self.items)] = True
        return m


@dataclass(frozen=True)
class Challenge:
    """``l`` (item, weight) pairs shown in one round."""

    items: tuple[int, ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(int(i) for i in self.items))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(self.items) != len(self.weights):
            raise ValueError("items and weights differ in length")
        if len(set(self.items)) != len(self.items):
            raise ValueError("challenge items must be distinct")

    @property
    def entries(self) -> list[tuple[int, int]]:
        return list(zip(self.items, self.weights))


@dataclass(frozen=True)
class Observation:
    """What an eavesdropper sees: the challenge and the submitted response."""

    challenge: Challenge
    response: int


@dataclass(frozen=True)
class RoundRecord:
    challenge: Challenge
    response: int
    g: int
    raw_sum: int
    modulus_truth: bool
    flipped: bool = False

    def observe(self) -> Observation:
        return Observation(self.challenge, self.response)


def random_secret(params: SchemeParams, rng: np.random.Generator) -> Secret:
    return Secret(tuple(sorted(int(i) for i in rng.choice(params.n, params.k, replace=False))))


def sample_challenge(params: SchemeParams, rng: np.random.Generator) -> Challenge:
    # partial Fisher-Yates over the pool; first l positions form the window
    pool = np.arange(params.n)
    for i in range(params.l):
        j = int(rng.integers(i, params.n))
        pool[i], pool[j] = pool[j], pool[i]
    weights = rng.integers(0, params.d, size=params.l)
    return Challenge(tuple(pool[: params.l]), tuple(weights))


def _post_map(params: SchemeParams, raw, g, rng_draw_bc, flip):
    """Vectorised response rule; ``flip`` is already masked to non-empty windows."""
    d = params.d
    if params.kind is SchemeKind.BC:
        return np.where(g > 0, raw % d, rng_draw_bc)
    if params.kind is SchemeKind.FT:
        return np.where(g > 0, (raw % d) >= d // 2, 0).astype(np.int64)
    return (raw % 2) ^ flip


def respond(
    params: SchemeParams, secret: Secret, challenge: Challenge, rng: np.random.Generator
) -> RoundRecord:
    """Compute the user's response to ``challenge`` and label the round.

    ``rng`` is consumed only when the scheme needs randomness: the empty-event
    response for ``bc`` and the flip coin for ``hb``.
    """
    members = set(secret.items)
    present = [w for i, w in challenge.entries if i in members]
    g = len(present)
    raw = sum(present)
    flipped = False
    if params.kind is SchemeKind.BC:
        response = raw % params.d if g else int(rng.integers(0, params.d))
    elif params.kind is SchemeKind.FT:
        response = int((raw % params.d) >= params.d // 2) if g else 0
    else:
        # the coin is drawn even for an empty window to keep streams aligned
        coin = bool(rng.random() < params.eta)
        flipped = coin and g > 0
        response = (raw % 2) ^ int(flipped)
    return RoundRecord(challenge, int(response), g, raw, raw >= params.d, flipped)


@dataclass
class RoundBatch:
    """Column-oriented block of simulated rounds for one secret.

    ``items`` and ``weights`` have shape ``(rounds, l)``; the rest are
    per-round vectors.
    """

    items: np.ndarray
    weights: np.ndarray
    response: np.ndarray
    g: np.ndarray
    raw_sum: np.ndarray
    modulus_truth: np.ndarray
    flipped: np.ndarray = field(repr=False)

    def __len__(self):
        return len(self.response)

    def record(self, i: int) -> RoundRecord:
        return RoundRecord(
            Challenge(tuple(self.items[i]), tuple(self.weights[i])),
            int(self.response[i]),
            int(self.g[i]),
            int(self.raw_sum[i]),
            bool(self.modulus_truth[i]),
            bool(self.flipped[i]),
        )


def simulate_rounds(
    params: SchemeParams, secret: Secret | np.ndarray, count: int, rng: np.random.Generator
) -> RoundBatch:
    """Draw ``count`` independent challenges and the user's responses.

    Windows are the ``l`` smallest of ``n`` i.i.d. uniform keys, which is a
    uniform ``l``-subset.  ``secret`` may be a precomputed boolean mask.
    """
    mask = secret if isinstance(secret, np.ndarray) else secret.mask(params.n)
    n, l, d = params.n, params.l, params.d
    keys = rng.random((count, n))
    if l < n:
        items = np.argpartition(keys, l - 1, axis=1)[:, :l]
    else:
        items = np.argsort(keys, axis=1)
    weights = rng.integers(0, d, size=(count, l))
    hit = mask[items]
    g = hit.sum(axis=1)
    raw = np.where(hit, weights, 0).sum(axis=1)
    if params.kind is SchemeKind.BC:
        extra = rng.integers(0, d, size=count)
        flipped = np.zeros(count, dtype=bool)
    elif params.kind is SchemeKind.HB:
        flipped = (rng.random(count) < params.eta) & (g > 0)
        extra = None
    else:
        extra = None
        flipped = np.zeros(count, dtype=bool)
    response = _post_map(params, raw, g, extra, flipped.astype(np.int64))
    return RoundBatch(items, weights, response.astype(np.int64), g, raw, raw >= d, flipped)


def rounds_per_session(params: SchemeParams, target: float, p_guess: float | None = None) -> int:
    """Smallest session length keeping a random guesser's success at or below ``target``.

    For ``bc``/``ft`` the guesser answers the most likely response every
    round, so success is ``p_guess ** m``; ``p_guess`` defaults to the exact
    value from the response distribution.  For ``hb`` a session accepts at
    most ``floor(eta * m)`` wrong answers, and the guesser is right with
    probability 1/2 per round.
    """
    if not 0.0 < target < 1.0:
        raise ValueError(f"target must lie in (0, 1), got {target}")
    if params.kind is SchemeKind.HB:
        m = 1
        while True:
            allowed = math.floor(params.eta * m)
            tail = sum(math.comb(m, w) for w in range(allowed + 1)) / 2**m
            if tail <= target:
                return m
            m += 1
    if p_guess is None:
        from .bias import guess_probability

        p_guess = guess_probability(params)
    if not 0.0 < p_guess < 1.0:
        raise ValueError(f"p_guess must lie in (0, 1), got {p_guess}")
    m = math.ceil(math.log(target) / math.log(p_guess))
    # guard against log rounding at exact powers
    while m > 1 and p_guess ** (m - 1) <= target:
        m -= 1
    while p_guess**m > target:
        m += 1
    return m
