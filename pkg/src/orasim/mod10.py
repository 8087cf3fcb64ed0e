"""Mod10 one-time-pad PIN entry and reward-based digit recovery.

Per PIN position the user sees an OTP digit ``o`` and enters ``(s + o) mod 10``.
If the sum did not wrap, the secret digit is one of ``0..r``; if it wrapped,
one of ``r+1..9``.  The attacker rewards whichever set the oracle points to.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import seeding
from .oracle import NO_MOD, FaultyOracleConfig, query_many
from .passgrids import RecoveryResult

DIGITS = np.arange(10)
_BLOCK = 256


@dataclass(frozen=True)
class Mod10Round:
    otp: int
    response: int
    modulus_truth: bool

    def __post_init__(self):
        if not (0 <= self.otp <= 9 and 0 <= self.response <= 9):
            raise ValueError("otp and response must be digits")


def mod10_respond(pin_digit: int, otp: int) -> Mod10Round:
    total = pin_digit + otp
    return Mod10Round(otp, total % 10, total >= 10)


def consistent_digits(response: int, wrapped: bool) -> np.ndarray:
    """Secret digits compatible with ``response`` under the given wrap status."""
    return DIGITS > response if wrapped else DIGITS <= response


@dataclass
class DigitBoard:
    points: np.ndarray
    rounds_seen: int = 0

    @classmethod
    def zeros(cls) -> "DigitBoard":
        return cls(np.zeros(10, dtype=np.int64))

    def unique_top(self) -> int | None:
        best = int(np.argmax(self.points))
        if (self.points == self.points[best]).sum() > 1:
            return None
        return best


def mod10_round(board: DigitBoard, response: int, oracle_answer: int) -> DigitBoard:
    reward = consistent_digits(response, oracle_answer != NO_MOD).astype(np.int64)
    return DigitBoard(board.points + reward, board.rounds_seen + 1)


def _trial(oracle, pin_length, max_rounds, base_seed, trial):
    pin_rng = seeding.stream(base_seed, seeding.MOD10, trial, 0)
    oracle_rng = seeding.stream(base_seed, seeding.MOD10, trial, 1)
    pin = pin_rng.integers(0, 10, size=pin_length)
    others = DIGITS[None, :] != pin[:, None]
    points = np.zeros((pin_length, 10), dtype=np.int64)
    done = 0
    while done < max_rounds:
        size = min(_BLOCK, max_rounds - done)
        otp = pin_rng.integers(0, 10, size=(size, pin_length))
        total = pin + otp
        response, truth = total % 10, total >= 10
        answers = query_many(oracle, truth.ravel(), oracle_rng).reshape(size, pin_length)
        wrapped = (answers != NO_MOD)[:, :, None]
        reward = np.where(wrapped, DIGITS > response[:, :, None], DIGITS <= response[:, :, None])
        cum = points + np.cumsum(reward, axis=0)
        true_pts = np.take_along_axis(cum, np.broadcast_to(pin[None, :, None], (size, pin_length, 1)), 2)
        rival = np.where(others, cum, np.iinfo(np.int64).min).max(axis=2, keepdims=True)
        ok = (true_pts > rival).all(axis=(1, 2))
        if ok.any():
            return done + int(np.argmax(ok)) + 1
        points = cum[-1]
        done += size
    return None


def mod10_run(
    oracle: FaultyOracleConfig,
    trials: int,
    pin_length: int = 4,
    max_rounds: int = 100_000,
    base_seed: int = 0,
) -> RecoveryResult:
    """Rounds until every PIN digit is the strict leader of its position's board."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if pin_length < 1:
        raise ValueError("pin_length must be >= 1")
    counts = [_trial(oracle, pin_length, max_rounds, base_seed, t) for t in range(trials)]
    return RecoveryResult(f"{oracle.tpr:g}", counts)


__all__ = [
    "Mod10Round",
    "DigitBoard",
    "mod10_respond",
    "consistent_digits",
    "mod10_round",
    "mod10_run",
]
