"""Command-line entry point: ``orasim <command> [options]``.

Every command starts from the ``--config`` file (or built-in defaults),
applies the command-line overrides, validates the result and runs one
campaign.  Exit status is 0 on success, 1 when a regression gate fails,
2 on an invalid configuration and 3 on an I/O error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .campaign import (
    HEADERS,
    CampaignIOError,
    render_csv,
    reproduce_published_tables,
    run_campaign,
    write_atomic,
)
from .config import CampaignConfig, ConfigError, from_dict, load_config

EXIT_GATE = 1
EXIT_CONFIG = 2
EXIT_IO = 3


def _globals(defaults: bool) -> argparse.ArgumentParser:
    # subcommands reuse these flags with suppressed defaults so either position works
    p = argparse.ArgumentParser(add_help=False)
    default = None if defaults else argparse.SUPPRESS
    p.add_argument("--config", type=Path, default=default, help="YAML or JSON campaign file")
    p.add_argument("--seed", type=int, default=default, help="base seed (non-negative)")
    p.add_argument("--out", type=str, default=default, help="output directory")
    p.add_argument("--threads", type=int, default=default, help="worker processes")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orasim", description=__doc__.splitlines()[0], parents=[_globals(True)])
    sub = parser.add_subparsers(dest="command", required=True)
    common = [_globals(False)]
    floats = dict(type=float, nargs="+")

    p = sub.add_parser("analyze", parents=common, help="exact modulus-event probabilities and weights")
    p.add_argument("--scheme", help="preset name (bc, ft, hb)")

    p = sub.add_parser("attack", parents=common, help="points-attack sweep over a TPR x TNR grid")
    p.add_argument("--scheme")
    p.add_argument("--tpr", **floats)
    p.add_argument("--tnr", **floats)
    p.add_argument("--iterations", type=int)
    p.add_argument("--max-rounds", type=int)
    p.add_argument("--gate", action="store_true", default=None, help="fail if published cells fall outside tolerance")

    p = sub.add_parser("trace", parents=common, help="rank-gap trace around position k")
    p.add_argument("--scheme")
    p.add_argument("--tpr", type=float)
    p.add_argument("--tnr", type=float)
    p.add_argument("--runs", type=int, help="runs averaged per round")
    p.add_argument("--rounds", type=int)

    p = sub.add_parser("passgrids", parents=common, help="PassGrids recovery CDF")
    p.add_argument("--accuracy", **floats)
    p.add_argument("--trials", type=int)
    p.add_argument("--max-obs", type=int)
    p.add_argument("--elimination", action="store_true", default=None, help="hard pruning with a perfect oracle")
    p.add_argument("--penalties", type=int, nargs=2, metavar=("MISMATCH", "DISAGREE"))

    p = sub.add_parser("mod10", parents=common, help="Mod10 PIN recovery")
    p.add_argument("--accuracy", **floats)
    p.add_argument("--trials", type=int)
    p.add_argument("--pin-length", type=int)
    p.add_argument("--max-rounds", type=int)

    p = sub.add_parser("reproduce", parents=common, help="re-run published attack cells and grade them")
    p.add_argument("--cells", nargs="+", default=["spot"],
                   help="'spot', a scheme name for its whole table, or scheme:tpr:tnr")
    p.add_argument("--iterations", type=int, default=500)
    p.add_argument("--tolerance", type=float)
    p.add_argument("--high-variance-tolerance", type=float)
    return parser


# (argparse dest, config section, config key)
_OVERRIDES = {
    "analyze": [],
    "attack": [("tpr", "oracle", "tpr"), ("tnr", "oracle", "tnr"),
               ("iterations", "attack", "iterations"), ("max_rounds", "attack", "max_rounds"),
               ("gate", "attack", "gate")],
    "trace": [("runs", "attack", "iterations"),
              ("rounds", "attack", "trace_rounds")],
    "passgrids": [("accuracy", "oracle", "accuracy"), ("trials", "attack", "iterations"),
                  ("max_obs", "attack", "max_rounds"), ("elimination", "attack", "elimination"),
                  ("penalties", "attack", "pg_penalties")],
    "mod10": [("accuracy", "oracle", "accuracy"), ("trials", "attack", "iterations"),
              ("pin_length", "attack", "pin_length"), ("max_rounds", "attack", "max_rounds")],
    "reproduce": [("tolerance", "attack", "tolerance"),
                  ("high_variance_tolerance", "attack", "high_variance_tolerance")],
}
_KIND = {"analyze": "analyze", "attack": "points", "trace": "trace", "passgrids": "passgrids", "mod10": "mod10"}


def resolve_config(args: argparse.Namespace) -> CampaignConfig:
    base = load_config(args.config) if args.config else CampaignConfig()
    data = base.to_dict()
    if args.command in _KIND:
        data["attack"]["kind"] = _KIND[args.command]
    for dest, section, key in _OVERRIDES[args.command]:
        value = getattr(args, dest, None)
        if value is not None:
            data[section][key] = value
    if getattr(args, "scheme", None):
        # a named preset replaces any explicit parameters from the file
        data["scheme"] = {"preset": args.scheme}
    if args.command == "trace":
        if args.tpr is not None:
            data["oracle"]["tpr"] = [args.tpr]
        if args.tnr is not None:
            data["oracle"]["tnr"] = [args.tnr]
    for flag, key in (("seed", "seed"), ("threads", "threads")):
        if getattr(args, flag, None) is not None:
            data[key] = getattr(args, flag)
    if getattr(args, "out", None) is not None:
        data["output"]["dir"] = args.out
    return from_dict(data)


def _reproduce(args, cfg: CampaignConfig) -> int:
    rows = reproduce_published_tables(
        args.cells, args.iterations, cfg.attack.tolerance, cfg.attack.high_variance_tolerance,
        base_seed=cfg.seed, threads=cfg.threads,
    )
    for r in rows:
        verdict = "PASS" if r.passed else "FAIL"
        print(f"{verdict} {r.scheme} tpr={r.tpr:g} tnr={r.tnr:g} published={r.published:.3f} "
              f"measured={r.measured:.3f} deviation={r.deviation:+.1%} (tolerance {r.tolerance:.0%})")
    write_atomic(Path(cfg.output.dir) / "reproduce.csv", render_csv(HEADERS["reproduce"], (r.row() for r in rows)))
    return 0 if all(r.passed for r in rows) else EXIT_GATE


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = resolve_config(args)
    except ConfigError as exc:
        print(exc, file=sys.stderr)
        return EXIT_CONFIG
    try:
        if args.command == "reproduce":
            try:
                return _reproduce(args, cfg)
            except ValueError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_CONFIG
        result = run_campaign(cfg)
    except CampaignIOError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    for path in result.files.values():
        print(f"wrote {path}")
    print(f"wrote {result.manifest_path}")
    if result.gate:
        for g in result.gate:
            if not g.passed:
                print(f"gate FAIL {g.scheme} tpr={g.tpr:g} tnr={g.tnr:g}: "
                      f"{g.measured:.3f} vs {g.published:.3f} ({g.deviation:+.1%})", file=sys.stderr)
        if not result.gate_passed:
            return EXIT_GATE
    return 0


if __name__ == "__main__":
    sys.exit(main())
