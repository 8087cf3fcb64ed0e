"""Campaign configuration: YAML (or JSON) file with nested sections.

Example::

    seed: 7
    threads: 1
    scheme:
      preset: bc          # or explicit n, k, l, d, kind, eta
    oracle:
      tpr: [1.0, 0.9]
      tnr: [1.0, 0.8]
      accuracy: [1.0, 0.8]   # symmetric oracles for passgrids / mod10
    attack:
      kind: points        # points | trace | analyze | passgrids | mod10
      iterations: 50
      max_rounds: 200000
      gate: true          # compare against published means, fail outside tolerance
    output:
      dir: results
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import yaml

from .attack import DEFAULT_MAX_ROUNDS, PenaltyVectors
from .schemes import PRESETS, SchemeKind, SchemeParams

ATTACK_KINDS = ("points", "trace", "analyze", "passgrids", "mod10")


class ConfigError(ValueError):
    """Raised with every violated constraint, one per line."""

    def __init__(self, problems: list[str]):
        self.problems = list(problems)
        super().__init__("invalid configuration:\n" + "\n".join(f"  - {p}" for p in self.problems))


@dataclass
class SchemeSection:
    preset: str | None = "bc"
    n: int | None = None
    k: int | None = None
    l: int | None = None
    d: int | None = None
    kind: str | None = None
    eta: float | None = None

    def params(self) -> SchemeParams:
        fields = dataclasses.asdict(PRESETS[self.preset]) if self.preset else {"kind": "bc", "eta": 0.0}
        for name in ("n", "k", "l", "d", "kind", "eta"):
            if getattr(self, name) is not None:
                fields[name] = getattr(self, name)
        return SchemeParams(**fields)

    @property
    def name(self) -> str:
        if self.preset and all(getattr(self, f) is None for f in ("n", "k", "l", "d", "kind", "eta")):
            return self.preset
        p = self.params()
        return f"{p.kind.value}({p.n},{p.k},{p.l},{p.d})"


@dataclass
class OracleSection:
    tpr: list[float] = field(default_factory=lambda: [1.0])
    tnr: list[float] = field(default_factory=lambda: [1.0])
    accuracy: list[float] = field(default_factory=lambda: [1.0])


@dataclass
class AttackSection:
    kind: str = "points"
    iterations: int = 100
    max_rounds: int = DEFAULT_MAX_ROUNDS
    u: list[int] | None = None
    v: list[int] | None = None
    trace_rounds: int = 600
    pin_length: int = 4
    pg_penalties: list[int] = field(default_factory=lambda: [10, 3])
    elimination: bool = False
    gate: bool = False
    tolerance: float = 0.10
    high_variance_tolerance: float = 0.15

    def penalties(self, d: int) -> PenaltyVectors:
        default = PenaltyVectors.default(d)
        return PenaltyVectors(
            default.u if self.u is None else self.u,
            default.v if self.v is None else self.v,
        )


@dataclass
class OutputSection:
    dir: str = "results"


@dataclass
class CampaignConfig:
    scheme: SchemeSection = field(default_factory=SchemeSection)
    oracle: OracleSection = field(default_factory=OracleSection)
    attack: AttackSection = field(default_factory=AttackSection)
    output: OutputSection = field(default_factory=OutputSection)
    seed: int = 0
    threads: int = 1

    def to_dict(self) -> dict[str, Any]:
        return dataclasses.asdict(self)

    def dump(self) -> str:
        return yaml.safe_dump(self.to_dict(), sort_keys=True)

    def violations(self) -> list[str]:
        return _check(self)

    def validate(self) -> "CampaignConfig":
        problems = self.violations()
        if problems:
            raise ConfigError(problems)
        return self


_SECTIONS = {
    "scheme": SchemeSection,
    "oracle": OracleSection,
    "attack": AttackSection,
    "output": OutputSection,
}


def _probability_list(name, values, problems):
    if not isinstance(values, list) or not values:
        problems.append(f"{name}: expected a non-empty list of probabilities")
        return
    for i, v in enumerate(values):
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            problems.append(f"{name}[{i}]: expected a number, got {v!r}")
        elif not 0.0 <= v <= 1.0:
            problems.append(f"{name}[{i}]: {v} outside [0, 1]")


def _positive_int(name, value, problems, minimum=1):
    if isinstance(value, bool) or not isinstance(value, int):
        problems.append(f"{name}: expected an integer, got {value!r}")
    elif value < minimum:
        problems.append(f"{name}: must be >= {minimum}, got {value}")


def _check(cfg: CampaignConfig) -> list[str]:
    problems: list[str] = []
    s = cfg.scheme
    if s.preset is not None and s.preset not in PRESETS:
        problems.append(f"scheme.preset: unknown preset {s.preset!r} (choose from {sorted(PRESETS)})")
    elif s.preset is None and any(getattr(s, f) is None for f in ("n", "k", "l", "d")):
        problems.append("scheme: without a preset, n, k, l and d are all required")
    else:
        for f in ("n", "k", "l", "d"):
            if getattr(s, f) is not None:
                _positive_int(f"scheme.{f}", getattr(s, f), problems)
        if s.kind is not None and s.kind not in {k.value for k in SchemeKind}:
            problems.append(f"scheme.kind: unknown kind {s.kind!r}")
        elif not problems:
            try:
                s.params()
            except ValueError as exc:
                problems.extend(f"scheme: {msg}" for msg in str(exc).split("; "))

    _probability_list("oracle.tpr", cfg.oracle.tpr, problems)
    _probability_list("oracle.tnr", cfg.oracle.tnr, problems)
    _probability_list("oracle.accuracy", cfg.oracle.accuracy, problems)

    a = cfg.attack
    if a.kind not in ATTACK_KINDS:
        problems.append(f"attack.kind: {a.kind!r} not one of {list(ATTACK_KINDS)}")
    _positive_int("attack.iterations", a.iterations, problems)
    _positive_int("attack.max_rounds", a.max_rounds, problems)
    _positive_int("attack.trace_rounds", a.trace_rounds, problems)
    _positive_int("attack.pin_length", a.pin_length, problems)
    for name in ("tolerance", "high_variance_tolerance"):
        t = getattr(a, name)
        if isinstance(t, bool) or not isinstance(t, (int, float)) or not 0.0 < t < 1.0:
            problems.append(f"attack.{name}: expected a fraction in (0, 1), got {t!r}")
    pg = a.pg_penalties
    if not (isinstance(pg, list) and len(pg) == 2 and all(isinstance(x, int) for x in pg) and pg[0] > pg[1] > 0):
        problems.append(f"attack.pg_penalties: expected [mismatch, disagreement] with mismatch > disagreement > 0, got {pg!r}")
    scheme_ok = not any(p.startswith("scheme") for p in problems)
    if (a.u is not None or a.v is not None) and scheme_ok:
        d = s.params().d
        try:
            vectors = a.penalties(d)
        except (ValueError, TypeError) as exc:
            problems.append(f"attack.u/v: {exc}")
        else:
            if vectors.d != d:
                problems.append(f"attack.u/v: length {vectors.d} differs from the scheme modulus {d}")
    if not isinstance(cfg.output.dir, str) or not cfg.output.dir:
        problems.append("output.dir: expected a non-empty path")
    _positive_int("seed", cfg.seed, problems, minimum=0)
    _positive_int("threads", cfg.threads, problems)
    return problems


def from_dict(data: dict[str, Any]) -> CampaignConfig:
    """Build and validate a config, reporting unknown keys alongside range errors."""
    if not isinstance(data, dict):
        raise ConfigError([f"top level: expected a mapping, got {type(data).__name__}"])
    problems = []
    kwargs: dict[str, Any] = {}
    for key, value in data.items():
        if key in _SECTIONS:
            cls = _SECTIONS[key]
            if value is None:
                value = {}
            if not isinstance(value, dict):
                problems.append(f"{key}: expected a mapping")
                continue
            names = {f.name for f in dataclasses.fields(cls)}
            problems.extend(f"{key}.{k}: unknown key" for k in value if k not in names)
            kwargs[key] = cls(**{k: v for k, v in value.items() if k in names})
        elif key in ("seed", "threads"):
            kwargs[key] = value
        else:
            problems.append(f"{key}: unknown key")
    cfg = CampaignConfig(**kwargs)
    problems.extend(cfg.violations())
    if problems:
        raise ConfigError(problems)
    return cfg


def load_config(path: str | Path) -> CampaignConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError([f"{path}: cannot read ({exc.strerror})"]) from exc
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ConfigError([f"{path}: parse error: {exc}"]) from exc
    return from_dict(data or {})


__all__ = [
    "ATTACK_KINDS",
    "CampaignConfig",
    "ConfigError",
    "SchemeSection",
    "OracleSection",
    "AttackSection",
    "OutputSection",
    "from_dict",
    "load_config",
]
