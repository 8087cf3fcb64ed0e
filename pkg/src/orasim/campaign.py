"""Campaign orchestration, deterministic CSV reports and published-value regression.

CSV files are UTF-8 with ``\\n`` line endings, a fixed header per report
kind and floats printed with six decimals (empty for undefined values), so
two runs of the same config and seed produce identical bytes.  Files are
written to a temporary sibling and moved into place, so an interrupted run
never leaves a half-written report over a previous one.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
import os
import tempfile
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__, published
from .attack import SweepCell, average_trace, sweep
from .bias import conditional_expected_weight, expected_weight_all_g, response_bias_table
from .config import CampaignConfig
from .mod10 import mod10_run
from .oracle import FaultyOracleConfig
from .passgrids import RecoveryResult, pg_run
from .schemes import SchemeParams, preset

HEADERS = {
    "points": ["scheme", "tpr", "tnr", "iterations", "mean_rounds", "std_rounds", "censored"],
    "trace": ["round", "diff_km1_k", "diff_k_kp1", "diff_kp1_kp2"],
    "analyze": ["scheme", "g", "response", "p_mod", "p_no_mod", "e_weight_mod", "e_weight_no_mod"],
    "passgrids": ["accuracy", "observation_count", "cdf_fraction"],
    "mod10": ["accuracy", "round_count", "cdf_fraction"],
    "summary": ["accuracy", "trials", "mean", "median", "censored"],
    "reproduce": ["scheme", "tpr", "tnr", "published", "measured", "deviation", "tolerance", "passed"],
}

# published means at or above this many rounds get the wider tolerance
HIGH_VARIANCE_ROUNDS = 2000.0


class CampaignIOError(OSError):
    pass


def fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return "" if math.isnan(value) else f"{float(value):.6f}"
    return str(value)


def render_csv(header: list[str], rows) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) for v in row])
    return buf.getvalue().encode("utf-8")


def write_atomic(path: Path, data: bytes) -> None:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
        try:
            with os.fdopen(fd, "wb") as fh:
                fh.write(data)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    except OSError as exc:
        raise CampaignIOError(exc.errno, f"cannot write report {path}: {exc.strerror}") from exc


# report builders ----------------------------------------------------------


def analyze_rows(name: str, params: SchemeParams):
    table = response_bias_table(params)

    def weight(g, event):
        try:
            return conditional_expected_weight(g, params.d, event)
        except ValueError:
            return None

    for g in range(params.max_g + 1):
        for r in range(params.response_space):
            p = table.p_mod_given_rg[r, g]
            yield (name, g, r, p, 1.0 - p, weight(g, "mod"), weight(g, "no_mod"))
    for r in range(params.response_space):
        p = table.p_mod_given_r[r]
        yield (
            name, "all", r, p, 1.0 - p,
            expected_weight_all_g(params, "mod"), expected_weight_all_g(params, "no_mod"),
        )


def points_rows(cells: list[SweepCell]):
    for c in cells:
        yield (c.scheme, c.tpr, c.tnr, c.iterations, c.mean_rounds, c.std_rounds, c.censored)


def cdf_rows(results: list[RecoveryResult]):
    upto = max((max((c for c in r.counts if c is not None), default=0) for r in results), default=0)
    for res in results:
        for m, frac in res.cdf(upto):
            yield (res.label, m, frac)


def summary_rows(results: list[RecoveryResult]):
    for res in results:
        yield (res.label, len(res.counts), res.mean, res.median, res.censored)


# regression against published values -------------------------------------


@dataclass(frozen=True)
class GateRow:
    scheme: str
    tpr: float
    tnr: float
    published: float
    measured: float
    tolerance: float

    @property
    def deviation(self) -> float:
        return (self.measured - self.published) / self.published

    @property
    def passed(self) -> bool:
        return bool(abs(self.deviation) <= self.tolerance)

    def row(self):
        return (self.scheme, self.tpr, self.tnr, self.published, self.measured, self.deviation, self.tolerance, self.passed)


def tolerance_for(published_mean: float, tolerance: float = 0.10, high_variance_tolerance: float = 0.15) -> float:
    return high_variance_tolerance if published_mean >= HIGH_VARIANCE_ROUNDS else tolerance


def gate_cells(cells: list[SweepCell], tolerance: float = 0.10, high_variance_tolerance: float = 0.15) -> list[GateRow]:
    """Compare every cell that has a published counterpart."""
    rows = []
    for c in cells:
        ref = published.ATTACK_ROUNDS.get((c.scheme, c.tpr, c.tnr))
        if ref is not None:
            rows.append(GateRow(c.scheme, c.tpr, c.tnr, ref, c.mean_rounds,
                                tolerance_for(ref, tolerance, high_variance_tolerance)))
    return rows


SPOT_CELLS = [
    ("bc", 1.0, 1.0), ("bc", 1.0, 0.8), ("bc", 1.0, 0.6), ("bc", 1.0, 0.35),
    ("ft", 1.0, 1.0), ("ft", 1.0, 0.6), ("hb", 1.0, 1.0), ("hb", 1.0, 0.35),
]


def resolve_subset(subset) -> list[tuple[str, float, float]]:
    """Expand ``"spot"``, ``"bc"``/``"ft"``/``"hb"`` (whole table) or ``"scheme:tpr:tnr"`` strings."""
    if isinstance(subset, str):
        subset = [subset]
    cells = []
    for item in subset:
        if isinstance(item, tuple):
            key = (item[0], float(item[1]), float(item[2]))
        elif item == "spot":
            cells.extend(SPOT_CELLS)
            continue
        elif item in ("bc", "ft", "hb"):
            cells.extend(k for k in published.ATTACK_ROUNDS if k[0] == item)
            continue
        else:
            try:
                scheme, tpr, tnr = item.split(":")
                key = (scheme, float(tpr), float(tnr))
            except ValueError:
                raise ValueError(f"cannot parse cell {item!r}; use scheme:tpr:tnr") from None
        if key not in published.ATTACK_ROUNDS:
            raise ValueError(f"no published value for cell {key}")
        cells.append(key)
    return list(dict.fromkeys(cells))


def reproduce_published_tables(
    subset="spot",
    iterations: int = 500,
    tolerance: float = 0.10,
    high_variance_tolerance: float = 0.15,
    base_seed: int = 0,
    threads: int = 1,
    max_rounds: int = 200_000,
) -> list[GateRow]:
    """Simulate the selected published cells and grade each against its tolerance."""
    rows = []
    for scheme, tpr, tnr in resolve_subset(subset):
        (cell,) = sweep(preset(scheme), [tpr], [tnr], iterations,
                        max_rounds=max_rounds, base_seed=base_seed, threads=threads)
        ref = published.ATTACK_ROUNDS[(scheme, tpr, tnr)]
        rows.append(GateRow(scheme, tpr, tnr, ref, cell.mean_rounds,
                            tolerance_for(ref, tolerance, high_variance_tolerance)))
    return rows


# orchestration ------------------------------------------------------------


@dataclass
class CampaignResult:
    files: dict[str, Path]
    manifest_path: Path
    stats: list[dict]
    gate: list[GateRow]

    @property
    def gate_passed(self) -> bool:
        return all(g.passed for g in self.gate)


def _sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def run_campaign(config: CampaignConfig, out_dir: str | Path | None = None) -> CampaignResult:
    """Run the attack selected by ``config`` and write its CSV plus ``manifest.json``."""
    config.validate()
    start = time.perf_counter()
    kind = config.attack.kind
    a, o = config.attack, config.oracle
    out = Path(out_dir if out_dir is not None else config.output.dir)
    reports: dict[str, bytes] = {}
    stats: list[dict] = []
    gate: list[GateRow] = []

    if kind in ("points", "trace", "analyze"):
        params = config.scheme.params()
        name = config.scheme.name
    if kind == "points":
        cells = sweep(params, o.tpr, o.tnr, a.iterations, a.penalties(params.d),
                      a.max_rounds, config.seed, config.threads)
        for c in cells:
            c.scheme = name
        reports["attack.csv"] = render_csv(HEADERS["points"], points_rows(cells))
        stats = [{k: getattr(c, k) for k in HEADERS["points"]} for c in cells]
        if a.gate:
            gate = gate_cells(cells, a.tolerance, a.high_variance_tolerance)
    elif kind == "trace":
        oracle = FaultyOracleConfig(o.tpr[0], o.tnr[0])
        trace = average_trace(params, oracle, a.iterations, a.trace_rounds, a.penalties(params.d), config.seed)
        reports["trace.csv"] = render_csv(HEADERS["trace"], trace.rows())
        last = len(trace) - 1
        stats = [{"tpr": oracle.tpr, "tnr": oracle.tnr, "runs": a.iterations, "rounds": a.trace_rounds,
                  "final_diffs": [float(trace.diff_km1_k[last]), float(trace.diff_k_kp1[last]),
                                  float(trace.diff_kp1_kp2[last])]}]
    elif kind == "analyze":
        reports["analyze.csv"] = render_csv(HEADERS["analyze"], analyze_rows(name, params))
    elif kind == "passgrids":
        accs = [None] if a.elimination else o.accuracy
        results = [
            pg_run(FaultyOracleConfig() if acc is None else FaultyOracleConfig.symmetric(acc),
                   a.iterations, a.max_rounds, config.seed,
                   elimination=a.elimination, penalties=tuple(a.pg_penalties))
            for acc in accs
        ]
        reports["passgrids.csv"] = render_csv(HEADERS["passgrids"], cdf_rows(results))
        reports["passgrids_summary.csv"] = render_csv(HEADERS["summary"], summary_rows(results))
        stats = [dict(zip(HEADERS["summary"], r)) for r in summary_rows(results)]
    elif kind == "mod10":
        results = [
            mod10_run(FaultyOracleConfig.symmetric(acc), a.iterations, a.pin_length, a.max_rounds, config.seed)
            for acc in o.accuracy
        ]
        reports["mod10.csv"] = render_csv(HEADERS["mod10"], cdf_rows(results))
        reports["mod10_summary.csv"] = render_csv(HEADERS["summary"], summary_rows(results))
        stats = [dict(zip(HEADERS["summary"], r)) for r in summary_rows(results)]

    if gate:
        reports["gate.csv"] = render_csv(HEADERS["reproduce"], (g.row() for g in gate))

    files = {}
    for fname, data in reports.items():
        write_atomic(out / fname, data)
        files[fname] = out / fname
    manifest = {
        "version": __version__,
        "kind": kind,
        "seed": config.seed,
        "config": config.to_dict(),
        "files": [{"path": f, "sha256": _sha256(d), "bytes": len(d)} for f, d in reports.items()],
        "stats": stats,
        "gate": [dict(zip(HEADERS["reproduce"], g.row())) for g in gate],
        "wall_time_s": round(time.perf_counter() - start, 3),
    }
    manifest_path = out / "manifest.json"
    text = json.dumps(_plain(manifest), indent=2, allow_nan=False)
    write_atomic(manifest_path, (text + "\n").encode("utf-8"))
    return CampaignResult(files, manifest_path, stats, gate)


def _plain(value):
    """JSON-safe copy: numpy scalars unwrapped, NaN mapped to null."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and math.isnan(value):
        return None
    return value


__all__ = [
    "HEADERS",
    "CampaignIOError",
    "CampaignResult",
    "GateRow",
    "SPOT_CELLS",
    "render_csv",
    "write_atomic",
    "gate_cells",
    "resolve_subset",
    "reproduce_published_tables",
    "run_campaign",
]
