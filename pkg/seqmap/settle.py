"""
Simulated settle times of gates and netlists.

A transition holds the inputs at their ``after`` levels from a chosen
initial state and measures the first time after which the output stays
within kappa of its ideal Boolean value. The integration runs once on a
coarse grid over the whole horizon, then the last failing coarse step is
re-integrated at the requested resolution.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from circuit.elaborate import elaborate
from circuit.errors import NetlistError
from circuit.netlist import Netlist, boolean_outputs, gate_equilibria
from gates.equilibrium import equilibrium
from gates.network import output_name, single_gate_network
from gates.params import GateKind, NotGateParams
from kinetics.integrate import integrate
from kinetics.network import SpeciesRef
from oracle.boolean import eval_gate
from seqmap.bounds import not_gate_bounds, t_plus
from seqmap.errors import NonSettling

logger = logging.getLogger(__name__)

COARSE_SAMPLES = 20000
HORIZON_FACTOR = 100.0
RESOLUTION = 1e-3


@dataclass(frozen=True)
class TransitionScenario:
    """
    Input levels held during the transition and the state it starts from.

    For a single gate ``after`` and ``before`` are input tuples and
    ``initial_output`` may fix the starting output directly; otherwise the
    gate starts at its equilibrium under ``before``. For a netlist they are
    input assignments and every gate starts at its ``before`` equilibrium.
    """

    after: tuple | dict
    before: tuple | dict | None = None
    initial_output: float | None = None

    @classmethod
    def worst_case(cls, params, after):
        """Start a single gate's output on the rail opposite its target."""
        target = eval_gate(params.kind.value, [int(round(x)) for x in after])
        return cls(after=tuple(float(x) for x in after), initial_output=float(1 - target))


def default_horizon(params_list, kappa):
    return HORIZON_FACTOR * max(
        t_plus(p.v_bias, p.bias_enzyme.k_m, kappa) for p in params_list
    )


def _gate_setup(params, scenario):
    after = tuple(float(x) for x in scenario.after)
    if scenario.initial_output is not None:
        out0 = float(scenario.initial_output)
    elif scenario.before is not None:
        out0 = equilibrium(params, scenario.before)
    else:
        raise ValueError("transition needs either initial_output or before")
    s0 = out0 if isinstance(params, NotGateParams) else 1.0 - out0
    network, ref = single_gate_network(params, after, initial=s0)
    target = eval_gate(params.kind.value, [int(round(x)) for x in after])
    return network, output_name(network, ref), target, [params]


def _netlist_setup(netlist, scenario, output):
    if netlist.has_cycle:
        raise NetlistError("settle times of netlists with feedback need an explicit preset")
    if scenario.before is None:
        raise ValueError("netlist transitions need a 'before' assignment")
    name = output or netlist.primary_outputs[0][0]
    values = gate_equilibria(netlist, scenario.before)
    gates = [
        replace(g, initial=values[g.id] if g.kind is GateKind.NOT else 1.0 - values[g.id])
        for g in netlist.gates
    ]
    preset = replace(netlist, gates=tuple(gates))
    elab = elaborate(preset, {k: float(v) for k, v in scenario.after.items()})
    target = boolean_outputs(netlist, scenario.after)[name]
    source = elab.outputs[name]
    if not isinstance(source, SpeciesRef):
        return elab.network, None, target, [g.params for g in netlist.gates]
    return elab.network, output_name(elab.network, source), target, [g.params for g in netlist.gates]


def _output_error(trace, species, target):
    return np.abs(trace[species] - target)


def empirical_settle_time(subject, scenario, kappa, horizon=None, resolution=RESOLUTION, output=None):
    """
    Smallest simulated time after which |S(t) - f| < kappa holds for good.

    Parameters:
        subject (GateParams | Netlist): A single gate or a combinational netlist.
        scenario (TransitionScenario): Input levels and starting state.
        kappa (float): Error bound in (0, 1).
        horizon (float, optional): Simulated time; 100 * t_plus of the
            slowest bias enzyme by default.
        resolution (float): Time resolution of the answer.
        output (str, optional): Netlist output to watch.

    Returns:
        float: Settle time, 0.0 when the output starts within kappa.

    Raises:
        NonSettling: If the output is still off at the horizon.
    """
    if not (0.0 < kappa < 1.0):
        raise ValueError(f"kappa must lie in (0, 1), got {kappa}")
    if isinstance(subject, Netlist):
        network, species, target, params_list = _netlist_setup(subject, scenario, output)
    else:
        network, species, target, params_list = _gate_setup(subject, scenario)
    if species is None:
        return 0.0
    if horizon is None:
        horizon = default_horizon(params_list, kappa)

    coarse = integrate(network, 0.0, horizon, horizon / COARSE_SAMPLES)
    err = _output_error(coarse, species, target)
    failing = np.flatnonzero(err >= kappa)
    if failing.size == 0:
        return 0.0
    last = int(failing[-1])
    if last == len(err) - 1:
        raise NonSettling(
            f"output {species} still {err[-1]:.4g} away from {target} at the horizon t={horizon:.6g}"
        )

    t_fail, t_ok = float(coarse.times[last]), float(coarse.times[last + 1])
    if t_ok - t_fail <= resolution:
        return t_ok
    state = [coarse[pair.substrate_name][last] for pair in network.pairs]
    fine = integrate(network.with_state(state), t_fail, t_ok, resolution)
    fine_failing = np.flatnonzero(_output_error(fine, species, target) >= kappa)
    idx = int(fine_failing[-1]) + 1 if fine_failing.size else 1
    settle = float(fine.times[idx]) if idx < len(fine.times) else t_ok
    logger.debug("settle time of %s -> %s: %.4f", species, target, settle)
    return settle


@lru_cache(maxsize=None)
def gate_settle_bound(params, kappa):
    """
    Per-gate delay bound: the NOT gate's t_max (with its simulated fallback),
    or the slowest worst-case corner of a two-input gate.
    """
    if isinstance(params, NotGateParams):
        return not_gate_bounds(params, kappa).t_max
    return max(
        empirical_settle_time(params, TransitionScenario.worst_case(params, bits), kappa)
        for bits in itertools.product((0, 1), repeat=params.arity)
    )


def settle_bound(netlist, kappa):
    """Largest per-gate settle bound over the gate parameter sets of a netlist."""
    distinct = {gate.params for gate in netlist.gates}
    return max((gate_settle_bound(p, kappa) for p in distinct), default=0.0)


def auto_tau(netlist, kappa, dt_out=None):
    """
    Delay bound ``depth * settle bound``; a netlist without gates gets one
    sample step (or 1e-3 when no step is given).
    """
    tau = netlist.depth() * settle_bound(netlist, kappa)
    if tau > 0:
        return tau
    return dt_out if dt_out else RESOLUTION
