"""Closed-form and simulated settle times of a NOT gate."""

from __future__ import annotations

import sys

from cli.errors import EXIT_OK, ConfigError
from gates.params import NotGateParams
from seqmap.bounds import not_gate_bounds
from seqmap.settle import TransitionScenario, empirical_settle_time

HELP = "Print t_plus, t_minus and t_max of a NOT gate next to simulated settle times"


def add_arguments(parser):
    parser.add_argument('--no-empirical', action='store_true',
                        help="Only print the closed forms")


def run(config, options):
    params = config.gate
    if not isinstance(params, NotGateParams):
        raise ConfigError("bounds need a NOT gate subject", "gate.kind" if params is not None else config.subject)
    kappa = config.bounds_kappa
    empirical = not options.get("no_empirical")
    b = not_gate_bounds(params, kappa, empirical=empirical)

    lines = [f"kappa   = {kappa}", f"t_plus  = {b.t_plus:.6f}"]
    if b.t_minus_domain_ok:
        lines.append(f"t_minus = {b.t_minus:.6f}")
    else:
        limit = (1.0 + params.input_enzyme.k_m) * params.v_bias
        lines.append(f"t_minus = undefined (kappa <= (1 + K_m) * V_P = {limit:.6f})")
    lines.append(f"t_max   = {b.t_max:.6f}")

    if empirical:
        rise = empirical_settle_time(params, TransitionScenario.worst_case(params, (0,)), kappa)
        fall = b.t_minus_empirical
        if fall is None:
            fall = empirical_settle_time(params, TransitionScenario.worst_case(params, (1,)), kappa)
        lines.append(f"simulated rise (E1 removed)  = {rise:.6f}")
        lines.append(f"simulated fall (E1 inserted) = {fall:.6f}")
    return EXIT_OK, "\n".join(lines)


def main(argv=None):
    from cli.main import main as cli_main

    return cli_main(["bounds", *(sys.argv[1:] if argv is None else argv)])


if __name__ == "__main__":
    sys.exit(main())
