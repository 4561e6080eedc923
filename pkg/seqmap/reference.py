"""
Ideal output signals f(t) for the sequential-mapping check.

Combinational netlists evaluate their Boolean function on the input levels
seen ``delay * depth`` earlier. The RS latch applies its stepwise recurrence
once per input segment, on inputs encoded for its active-low pins.
"""

from __future__ import annotations

import numpy as np

from circuit.errors import NetlistError
from circuit.netlist import boolean_outputs
from circuit.rs_latch import LATCH_INPUTS
from kinetics.schedule import Schedule
from oracle.latch import encode_nand_latch_inputs, latch_reference


def select_output(netlist, output=None):
    names = [name for name, _ in netlist.primary_outputs]
    if not names:
        raise NetlistError("netlist has no primary output")
    if output is None:
        return names[0]
    if output not in names:
        raise NetlistError(f"no primary output {output!r}; have {', '.join(names)}")
    return output


def is_rs_latch(netlist):
    return (
        netlist.sequential
        and tuple(netlist.primary_inputs) == LATCH_INPUTS
        and "Q" in netlist.outputs
    )


def _schedules(netlist, waveforms):
    out = {}
    for name in netlist.primary_inputs:
        w = waveforms.get(name, 0.0)
        out[name] = w if isinstance(w, Schedule) else Schedule.constant(float(w))
    return out


def _bits_at(schedules, times):
    """Input bits (level >= 0.5) of every schedule at each instant."""
    bits = {}
    for name, schedule in schedules.items():
        clipped = np.maximum(times, schedule.start)
        bits[name] = (schedule.values(clipped) >= 0.5).astype(int)
    return bits


def reference_signal(netlist, waveforms, times, delay=0.0, initial_state=0, output=None):
    """
    Sample the ideal output on ``times``.

    Parameters:
        netlist (Netlist): Combinational netlist or the RS latch.
        waveforms (Mapping[str, Schedule | float]): Per primary input.
        times (array-like): Sample instants.
        delay (float): Propagation delay per gate, >= 0.
        initial_state (int): Latch state before the first input segment.
        output (str, optional): Primary output; the first one by default.

    Returns:
        np.ndarray: 0.0/1.0 per sample.
    """
    if delay < 0:
        raise ValueError(f"delay must be >= 0, got {delay}")
    times = np.asarray(times, dtype=float)
    name = select_output(netlist, output)
    schedules = _schedules(netlist, dict(waveforms or {}))
    shifted = np.maximum(times - delay * netlist.depth(), times[0] if times.size else 0.0)

    if netlist.sequential:
        if not is_rs_latch(netlist):
            raise NetlistError("reference signals of sequential netlists are defined for the RS latch only")
        q = _latch_reference(schedules, shifted, times, initial_state)
        return q if name == "Q" else 1.0 - q

    bits = _bits_at(schedules, shifted)
    keys = np.stack([bits[n] for n in netlist.primary_inputs], axis=1) if bits else np.zeros((times.size, 0), int)
    out = np.empty(times.size, dtype=float)
    rows, inverse = np.unique(keys, axis=0, return_inverse=True)
    inverse = np.asarray(inverse).reshape(-1)
    for i, row in enumerate(rows):
        value = boolean_outputs(netlist, dict(zip(netlist.primary_inputs, row)))[name]
        out[inverse == i] = value
    return out


def _latch_reference(schedules, shifted, times, initial_state):
    t0 = float(times[0]) if times.size else 0.0
    t_end = float(times[-1]) if times.size else 0.0
    edges = sorted({t for s in schedules.values() for t in s.switch_points(t0, t_end)})
    starts = np.array([t0, *edges])
    bits = _bits_at(schedules, starts)
    steps = [encode_nand_latch_inputs(bits["X1"][k], bits["X2"][k]) for k in range(len(starts))]
    states = np.asarray(latch_reference(steps, initial_state), dtype=float)
    segment = np.searchsorted(starts, shifted, side="right") - 1
    return states[np.clip(segment, 0, len(states) - 1)]
