"""Command-line front end for the scenario harness.

    so3obs run --config cfg.json [--scenario S] [--dt X] [--seed N] --out DIR
    so3obs list-scenarios
    so3obs order-study --dts 0.2,0.1,0.05 [--out DIR]

Flags override the corresponding config-file fields.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .harness import (SCENARIO_NOTES, SCENARIOS, ScenarioConfig,
                      config_from_dict, convergence_order_study, run_and_emit)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="so3obs",
        description="attitude observer scenario harness",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run one scenario and write CSV + summary")
    run.add_argument("--config", type=Path, help="JSON scenario configuration")
    run.add_argument("--scenario", choices=SCENARIOS,
                     help="scenario name (overrides the config file)")
    run.add_argument("--dt", type=float, help="epoch spacing, s")
    run.add_argument("--seed", type=int, help="seed for random initial attitude")
    run.add_argument("--out", type=Path, required=True, help="output directory")

    sub.add_parser("list-scenarios", help="list scenario names")

    study = sub.add_parser("order-study",
                           help="deviation from the continuous observer vs step size")
    study.add_argument("--dts", required=True,
                       help="comma-separated step sizes, e.g. 0.2,0.1,0.05")
    study.add_argument("--horizon", type=float, default=20.0,
                       help="study horizon, s (default 20)")
    study.add_argument("--out", type=Path, help="optional directory for order_study.csv")
    return parser


def _cmd_run(args) -> int:
    raw: dict = {}
    if args.config is not None:
        raw = json.loads(args.config.read_text())
    for field in ("scenario", "dt", "seed"):
        value = getattr(args, field)
        if value is not None:
            raw[field] = value
    if "scenario" not in raw:
        print("error: no scenario given (use --scenario or a config file)",
              file=sys.stderr)
        return 2
    cfg = config_from_dict(raw)
    summary = run_and_emit(cfg, args.out)
    for entry in summary["series"]:
        err = entry["terminal_frobenius_error"]
        shown = "non-finite" if err is None else f"{err:.6g}"
        print(f"{entry['csv']}: {entry['epochs']} epochs, "
              f"terminal error {shown}")
    print(f"summary.json written to {args.out} "
          f"({summary['elapsed_s']:.3f} s)")
    return 0


def _cmd_list() -> int:
    for name in SCENARIOS:
        print(f"{name:22s} {SCENARIO_NOTES[name]}")
    return 0


def _cmd_order_study(args) -> int:
    try:
        dts = [float(tok) for tok in args.dts.split(",") if tok.strip()]
    except ValueError:
        print(f"error: --dts expects comma-separated numbers, got {args.dts!r}",
              file=sys.stderr)
        return 2
    cfg = ScenarioConfig(scenario="constant_omega", T=args.horizon)
    rows = convergence_order_study(cfg, dts)
    print(f"{'dt':>8s} {'max deviation':>15s} {'ratio':>8s}")
    for row in rows:
        ratio = "" if row.ratio is None else f"{row.ratio:.3f}"
        print(f"{row.dt:8.4g} {row.deviation:15.6e} {ratio:>8s}")
    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        path = args.out / "order_study.csv"
        with open(path, "w") as fh:
            fh.write("dt,deviation,ratio\n")
            for row in rows:
                ratio = "" if row.ratio is None else f"{row.ratio:.17g}"
                fh.write(f"{row.dt:.17g},{row.deviation:.17g},{ratio}\n")
        print(f"table written to {path}")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "run":
        return _cmd_run(args)
    if args.command == "list-scenarios":
        return _cmd_list()
    return _cmd_order_study(args)


if __name__ == "__main__":
    sys.exit(main())
