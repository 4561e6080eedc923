from __future__ import annotations

import logging

import numpy as np

from circuit.elaborate import elaborate
from kinetics.integrate import integrate
from kinetics.network import SpeciesRef

logger = logging.getLogger(__name__)


def simulate_circuit(netlist, waveforms, t_end, dt_out, t0=0.0):
    """
    Integrate a netlist's joint dynamics under its input waveforms.

    Parameters:
        netlist (Netlist): Netlist to simulate.
        waveforms (Mapping[str, Schedule | float]): Per primary input.
        t_end (float): End time.
        dt_out (float): Output sampling step.
        t0 (float): Start time.

    Returns:
        Trace: Every gate species and enzyme, plus one ``outputs`` column per
        primary output (taken from the input waveform when the output is
        wired straight to an input).
    """
    elab = elaborate(netlist, waveforms)
    trace = integrate(elab.network, t0, t_end, dt_out)
    for name, source in elab.outputs.items():
        if isinstance(source, SpeciesRef):
            pair = elab.network.pair(source.pair)
            species = pair.substrate_name if source.slot == "substrate" else pair.product_name
            trace.outputs[name] = trace[species]
        else:
            trace.outputs[name] = np.asarray(source.values(trace.times), dtype=float)
    logger.debug("simulated %d gates to t=%g (%d samples)", len(netlist.gates), t_end, len(trace))
    return trace
