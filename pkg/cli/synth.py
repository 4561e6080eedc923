"""Synthesize an expression into a gate netlist."""

from __future__ import annotations

import sys

from circuit.netlist_io import dump_netlist, write_netlist
from cli.errors import EXIT_OK, ConfigError

HELP = "Map a Boolean expression onto enzyme gates and write the netlist"
OUT_SUFFIX = ".net"


def add_arguments(parser):
    pass


def run(config, options):
    if config.subject != "expression":
        raise ConfigError("synth needs an expression subject", config.subject)
    netlist = config.netlist
    out = options.get("out")
    if out:
        write_netlist(netlist, out)
        return EXIT_OK, f"Netlist saved to {out} ({len(netlist.gates)} gates, depth {netlist.depth()})"
    return EXIT_OK, dump_netlist(netlist).rstrip("\n")


def main(argv=None):
    from cli.main import main as cli_main

    return cli_main(["synth", *(sys.argv[1:] if argv is None else argv)])


if __name__ == "__main__":
    sys.exit(main())
