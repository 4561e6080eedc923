"""Simulate a scenario and write the trace as CSV."""

from __future__ import annotations

import sys

from circuit.simulate import simulate_circuit
from cli.config import build_waveforms, resolve_tau
from cli.errors import EXIT_OK

HELP = "Integrate the circuit under its input waveforms and write the trace CSV"
OUT_SUFFIX = ".csv"


def add_arguments(parser):
    pass


def run(config, options):
    tau = None
    if any(spec.min_length == "auto" for spec in config.random.values()):
        tau = resolve_tau(config)
    waveforms, t_end = build_waveforms(config, tau, options.get("seed"))
    trace = simulate_circuit(config.netlist, waveforms, t_end, config.dt_out)

    out = options.get("out")
    if out:
        trace.to_csv(out)
        return EXIT_OK, f"Trace saved to {out} ({len(trace)} samples)"
    text = trace.to_frame().to_csv(index=False, float_format="%.12g", lineterminator="\n")
    return EXIT_OK, text.rstrip("\n")


def main(argv=None):
    from cli.main import main as cli_main

    return cli_main(["simulate", *(sys.argv[1:] if argv is None else argv)])


if __name__ == "__main__":
    sys.exit(main())
