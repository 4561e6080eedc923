"""Truth table of a gate or combinational circuit, read off its equilibria."""

from __future__ import annotations

import itertools
import sys

import pandas as pd

from circuit.netlist import boolean_outputs, equilibrium_outputs
from cli.errors import EXIT_FAIL, EXIT_OK, ConfigError
from gates.params import validate_gate
from gates.threshold import LogicLevel, threshold
from gates.truth import truth_table
from oracle.boolean import eval_expr

HELP = "Tabulate equilibrium outputs against the Boolean function"


def add_arguments(parser):
    pass


def _gate_frame(config):
    rows = truth_table(config.gate, config.thresholds)
    names = config.netlist.primary_inputs
    return pd.DataFrame([
        {**dict(zip(names, row.inputs)), "output": row.concentration,
         "level": str(row.level), "expected": str(row.expected), "match": row.match}
        for row in rows
    ])


def _circuit_frame(config):
    netlist = config.netlist
    records = []
    for bits in itertools.product((0, 1), repeat=len(netlist.primary_inputs)):
        assignment = dict(zip(netlist.primary_inputs, bits))
        concentrations = equilibrium_outputs(netlist, assignment)
        if config.expression is not None:
            expected = {name: eval_expr(config.expression, assignment) for name in concentrations}
        else:
            expected = boolean_outputs(netlist, assignment)
        for name, x in concentrations.items():
            level = threshold(min(max(x, 0.0), 1.0), config.thresholds)
            want = LogicLevel.from_bit(expected[name])
            records.append({**assignment, "output": name, "concentration": x,
                            "level": str(level), "expected": str(want), "match": level is want})
    return pd.DataFrame(records)


def run(config, options):
    if config.netlist.sequential:
        raise ConfigError("truth tables need a combinational subject", config.subject)
    lines = []
    if config.subject == "gate":
        frame = _gate_frame(config)
        lines.append(f"{config.gate.kind} gate, rate constraints: {validate_gate(config.gate).report()}")
    else:
        frame = _circuit_frame(config)
    lines.append(frame.to_string(index=False, float_format=lambda x: f"{x:.6f}"))
    mismatches = int((~frame["match"]).sum())
    lines.append("all rows match" if mismatches == 0 else f"{mismatches} row(s) do not match")
    return (EXIT_OK if mismatches == 0 else EXIT_FAIL), "\n".join(lines)


def main(argv=None):
    from cli.main import main as cli_main

    return cli_main(["truth-table", *(sys.argv[1:] if argv is None else argv)])


if __name__ == "__main__":
    sys.exit(main())
