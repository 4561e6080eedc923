"""Check that a simulated circuit sequentially maps its Boolean reference."""

from __future__ import annotations

import logging
import sys

from circuit.rs_latch import LATCH_OUTPUTS
from cli.config import build_waveforms, resolve_tau
from cli.errors import EXIT_FAIL, EXIT_OK
from seqmap.check import check_circuit, format_report
from seqmap.latch import latch_corner_report
from seqmap.reference import is_rs_latch

logger = logging.getLogger(__name__)

HELP = "Simulate under the scenario's waveforms and run the sequential-mapping check"
OUT_SUFFIX = ".csv"


def add_arguments(parser):
    parser.add_argument('--limit', type=int, default=20,
                        help="Violations listed in the report (default 20)")
    parser.add_argument('--no-corners', action='store_true',
                        help="Skip the latch input-corner table")


def run(config, options):
    settings = config.seqmap
    tau = resolve_tau(config)
    waveforms, t_end = build_waveforms(config, tau, options.get("seed"))
    verdict, trace, _ = check_circuit(
        config.netlist, waveforms, t_end, config.dt_out, settings.kappa, tau,
        reference_delay=settings.reference_delay,
        initial_state=settings.initial_state,
        output=settings.output,
    )
    logger.info("kappa=%g tau=%g t_end=%g samples=%d", settings.kappa, tau, t_end, len(trace))
    lines = [format_report(verdict, options.get("limit"))]

    if options.get("out"):
        trace.to_csv(options["out"])
        lines.append(f"Trace saved to {options['out']}")

    if is_rs_latch(config.netlist) and not options.get("no_corners"):
        lines.append("")
        lines.append(f"latch corners ({LATCH_OUTPUTS[0]} after holding X1, X2):")
        lines += [str(row) for row in latch_corner_report(settings.kappa, dt_out=config.dt_out,
                                                          cfg=config.thresholds)]
    return (EXIT_OK if verdict.passed else EXIT_FAIL), "\n".join(lines)


def main(argv=None):
    from cli.main import main as cli_main

    return cli_main(["check-seqmap", *(sys.argv[1:] if argv is None else argv)])


if __name__ == "__main__":
    sys.exit(main())
