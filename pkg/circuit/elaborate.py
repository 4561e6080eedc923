"""Netlist -> one joint reaction network."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from circuit.errors import NetlistError
from gates.network import build_gate
from kinetics.errors import NetworkError
from kinetics.network import ReactionNetwork, SpeciesRef
from kinetics.schedule import Schedule

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Elaboration:
    """
    Attributes:
        network (ReactionNetwork): Pairs, enzymes and conversions of every gate.
        bindings (dict[str, str]): Input enzyme name -> driving source (gate id
            or primary input).
        outputs (dict[str, SpeciesRef | Schedule]): Primary output -> live
            species, or the input schedule itself for outputs wired straight
            to an input.
        schedules (dict[str, Schedule]): Primary input -> schedule.
    """

    network: ReactionNetwork
    bindings: dict
    outputs: dict
    schedules: dict


def _as_schedule(name, waveform):
    if isinstance(waveform, Schedule):
        return waveform
    try:
        return Schedule.constant(float(waveform))
    except (TypeError, ValueError):
        raise NetlistError(f"waveform for input {name!r} is neither a schedule nor a level") from None


def elaborate(netlist, waveforms=None):
    """
    Install every gate of ``netlist`` into a single reaction network.

    Wires from gates become coupled enzymes that read the source gate's
    output species at each right-hand-side evaluation; wires from primary
    inputs become scheduled enzymes.

    Parameters:
        netlist (Netlist): Validated netlist.
        waveforms (Mapping[str, Schedule | float], optional): Per primary
            input; inputs without a waveform are held at 0.

    Returns:
        Elaboration
    """
    waveforms = dict(waveforms or {})
    unknown = sorted(set(waveforms) - set(netlist.primary_inputs))
    if unknown:
        raise NetlistError(f"waveform(s) for unknown input(s): {', '.join(unknown)}")
    schedules = {}
    for name in netlist.primary_inputs:
        if name not in waveforms:
            logger.info("input %s has no waveform; holding it at 0", name)
        schedules[name] = _as_schedule(name, waveforms.get(name, 0.0))

    refs = {gate.id: SpeciesRef(gate.substrate, gate.output_slot) for gate in netlist.gates}
    pairs, conversions, enzymes, bindings = [], [], [], {}
    for gate in netlist.gates:
        drives = []
        for slot, source in zip(gate.inputs, netlist.drivers(gate.id)):
            bindings[slot] = source
            drives.append(refs[source] if source in refs else schedules[source])
        parts = build_gate(
            gate.params, gate.substrate, gate.product, gate.inputs, gate.bias, drives, gate.initial
        )
        pairs.append(parts.pair)
        conversions += parts.conversions
        enzymes += parts.enzymes

    try:
        network = ReactionNetwork(tuple(pairs), tuple(conversions), tuple(enzymes))
    except NetworkError as e:
        raise NetlistError(str(e)) from None

    outputs = {
        name: refs[source] if source in refs else schedules[source]
        for name, source in netlist.primary_outputs
    }
    logger.debug("elaborated %d gates: %d pairs, %d enzymes, %d couplings",
                 len(netlist.gates), len(pairs), len(enzymes),
                 sum(1 for e in enzymes if e.coupled))
    return Elaboration(network=network, bindings=bindings, outputs=outputs, schedules=schedules)
