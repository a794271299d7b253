"""``bench`` command line: run, compare, report."""

from __future__ import annotations

import argparse
import logging
import sys

from .graph import GraphError
from .optimizers import ALGORITHMS, ConfigurationError
from .experiment import ExperimentConfig, StoreError, cmd_compare, cmd_report, cmd_run


def _run(args: argparse.Namespace) -> None:
    cfg = ExperimentConfig.load(args.config)
    out = cmd_run(cfg, args.out, args.workers)
    print(f"wrote {cfg.runs_per_pair * len(cfg.datasets) * len(cfg.algorithms)} run records to {out}")
    print((out / "summary.csv").read_text(), end="")


def _compare(args: argparse.Namespace) -> None:
    for path in cmd_compare(args.store, args.primary, args.epsilon, args.pool):
        print(f"wrote {path}")


def _report(args: argparse.Namespace) -> None:
    out = cmd_report(args.store)
    print(f"wrote report files to {out}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bench", description="Community-detection optimizer benchmark.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="execute all seeded runs of an experiment config")
    run.add_argument("--config", required=True, help="JSON experiment config")
    run.add_argument("--out", help="output directory (overrides output_dir in the config)")
    run.add_argument("--workers", type=int, help="worker processes (default: BENCH_THREADS or CPU count)")
    run.set_defaults(func=_run)

    compare = sub.add_parser("compare", help="score a primary algorithm against the others")
    compare.add_argument("--primary", required=True, choices=ALGORITHMS)
    compare.add_argument("--store", required=True, help="directory written by `bench run`")
    compare.add_argument("--epsilon", type=float, help="tie tolerance (default: from config)")
    compare.add_argument("--pool", choices=("both", "primary"), help="sample defining best/worst levels")
    compare.set_defaults(func=_compare)

    report = sub.add_parser("report", help="emit dataset stats, chart data and rank tables")
    report.add_argument("--store", required=True)
    report.set_defaults(func=_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        args.func(args)
    except ConfigurationError as exc:
        print(f"bench: configuration error: {exc}", file=sys.stderr)
        return 2
    except (StoreError, GraphError, ValueError) as exc:
        print(f"bench: error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"bench: I/O error: {exc}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
