"""Simulation of modulus side-channel attacks on observation-resilient authentication."""

from .attack import (
    AttackOutcome,
    ConfidenceTrace,
    PenaltyVectors,
    ScoreBoard,
    SweepCell,
    attack_round,
    run_attack,
    sweep,
)
from .bias import (
    BiasTable,
    conditional_expected_weight,
    expected_weight_all_g,
    guess_probability,
    prob_g,
    prob_mod_event,
    prob_sum,
    response_bias_table,
)
from .mod10 import DigitBoard, Mod10Round, mod10_round, mod10_run
from .oracle import MOD, NO_MOD, FaultyOracleConfig, query
from .passgrids import (
    PGCandidateBoard,
    PGChallenge,
    PGSecretTuple,
    RecoveryResult,
    pg_attack_round,
    pg_respond,
    pg_run,
)
from .schemes import (
    PRESETS,
    Challenge,
    Observation,
    RoundRecord,
    SchemeKind,
    SchemeParams,
    Secret,
    preset,
    respond,
    rounds_per_session,
    sample_challenge,
    simulate_rounds,
)

__version__ = "0.1.0"
