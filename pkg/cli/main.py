"""
enzlogic: simulate biochemical logic circuits and check their sequential mapping.

    enzlogic simulate     --config scenario.json --out trace.csv
    enzlogic truth-table  --config scenario.json
    enzlogic check-seqmap --config scenario.json [--seed N]
    enzlogic bounds       --config not_gate.json
    enzlogic synth        --config expression.json --out circuit.net
    enzlogic curve        --config gate.json --out curve.csv

Several ``--config`` files run as a batch, ``--jobs`` at a time; the exit
code is the largest of the individual codes.
"""

from __future__ import annotations

import argparse
import logging
import sys

from cli.batch import COMMANDS, run_batch, run_one
from cli.errors import EXIT_CONFIG


def configure_logging(verbosity):
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def add_common_arguments(parser):
    parser.add_argument('--config', action='append', required=True, metavar='PATH',
                        help="Scenario JSON file; repeat to run a batch")
    parser.add_argument('--out', type=str, default=None,
                        help="Output file (a directory when several configs are given)")
    parser.add_argument('--seed', type=int, default=None,
                        help="Override every random waveform seed")
    parser.add_argument('--jobs', type=int, default=1,
                        help="Scenarios to run concurrently in batch mode (default 1)")
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help="-v for INFO, -vv for DEBUG logging on stderr")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="enzlogic",
        description="Biochemical enzyme logic gates: simulation and sequential-mapping checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, module in COMMANDS.items():
        p = sub.add_parser(name, help=module.HELP, description=module.HELP)
        add_common_arguments(p)
        module.add_arguments(p)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    if args.jobs < 1:
        print("--jobs must be >= 1", file=sys.stderr)
        return EXIT_CONFIG

    options = {k: v for k, v in vars(args).items() if k not in ("config", "command", "jobs", "verbose")}
    if len(args.config) == 1:
        result = run_one(args.command, args.config[0], options)
        if result.stdout:
            print(result.stdout)
        if result.stderr:
            print(result.stderr, file=sys.stderr)
        return result.code
    return run_batch(args.command, args.config, options, jobs=args.jobs)


if __name__ == "__main__":
    sys.exit(main())
