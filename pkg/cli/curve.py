"""Equilibrium response curve of a single gate."""

from __future__ import annotations

import sys

import numpy as np
import pandas as pd

from cli.errors import EXIT_OK, ConfigError
from gates.equilibrium import response_curve

HELP = "Sweep input enzyme levels and write the equilibrium output as CSV"
OUT_SUFFIX = ".csv"


def add_arguments(parser):
    parser.add_argument('--points', type=int, default=101,
                        help="Input levels on [0, 1] (default 101)")


def run(config, options):
    if config.gate is None:
        raise ConfigError("curve needs a gate subject", config.subject)
    points = options.get("points") or 101
    if points < 2:
        raise ConfigError(f"--points must be >= 2, got {points}", "--points")
    frame = pd.DataFrame(response_curve(config.gate, np.linspace(0.0, 1.0, points)))
    out = options.get("out")
    if out:
        frame.to_csv(out, index=False, float_format="%.12g", lineterminator="\n")
        return EXIT_OK, f"Curve saved to {out}"
    return EXIT_OK, frame.to_csv(index=False, float_format="%.12g", lineterminator="\n").rstrip("\n")


def main(argv=None):
    from cli.main import main as cli_main

    return cli_main(["curve", *(sys.argv[1:] if argv is None else argv)])


if __name__ == "__main__":
    sys.exit(main())
