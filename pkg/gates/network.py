"""
Reaction-network fragments for single gates.

A NOT gate is the pair (S1, S1') with E1: S1 -> S1' and the bias enzyme
P1: S1' -> S1; its output is S1. An OR/AND gate is the pair (S2, S2') with
E2, E3: S2 -> S2' and P2: S2' -> S2; its output is S2'.
"""

from __future__ import annotations

from dataclasses import dataclass

from gates.errors import GateParameterError
from gates.params import NotGateParams
from kinetics.network import (
    CatalyzedConversion,
    ConservedPair,
    EnzymeSignal,
    ReactionNetwork,
    SpeciesRef,
)
from kinetics.schedule import Schedule

NOT_NAMES = {"substrate": "S1", "product": "S1p", "inputs": ("E1",), "bias": "P1"}
TWO_INPUT_NAMES = {"substrate": "S2", "product": "S2p", "inputs": ("E2", "E3"), "bias": "P2"}


@dataclass(frozen=True)
class GateComponents:
    pair: ConservedPair
    enzymes: tuple[EnzymeSignal, ...]
    conversions: tuple[CatalyzedConversion, ...]
    output: SpeciesRef


def canonical_names(params):
    return NOT_NAMES if isinstance(params, NotGateParams) else TWO_INPUT_NAMES


def output_slot(params):
    """Slot of the gate's pair that carries its logic output."""
    return "substrate" if isinstance(params, NotGateParams) else "product"


def _input_enzyme(name, kinetics, drive):
    if isinstance(drive, SpeciesRef):
        return EnzymeSignal(name, kinetics.k_cat, kinetics.k_m, source=drive)
    if not isinstance(drive, Schedule):
        drive = Schedule.constant(float(drive))
    return EnzymeSignal(name, kinetics.k_cat, kinetics.k_m, schedule=drive)


def build_gate(params, substrate, product, input_names, bias_name, drives, initial=0.5):
    """
    Pair, enzymes and conversions of one gate.

    Parameters:
        params (NotGateParams | TwoInputGateParams): Gate parameters.
        substrate (str): Substrate species name (also the pair name).
        product (str): Product species name.
        input_names (sequence of str): Input enzyme names, one per input.
        bias_name (str): Bias enzyme name.
        drives (sequence): Per input, a Schedule, a constant level, or a
            SpeciesRef the enzyme concentration follows.
        initial (float): Initial substrate fraction.

    Returns:
        GateComponents
    """
    input_names = tuple(input_names)
    drives = tuple(drives)
    if len(input_names) != params.arity or len(drives) != params.arity:
        raise GateParameterError(
            f"{params.kind} gate takes {params.arity} inputs, got {len(input_names)} names "
            f"and {len(drives)} drives"
        )
    kinetics = (params.input_enzyme,) if isinstance(params, NotGateParams) else (params.input_a, params.input_b)

    pair = ConservedPair(substrate, product, s=float(initial))
    forward = SpeciesRef(substrate, "substrate")
    backward = SpeciesRef(substrate, "product")

    enzymes = [_input_enzyme(n, k, d) for n, k, d in zip(input_names, kinetics, drives)]
    enzymes.append(EnzymeSignal(
        bias_name,
        params.bias_enzyme.k_cat,
        params.bias_enzyme.k_m,
        schedule=Schedule.constant(params.bias_level),
    ))
    conversions = [CatalyzedConversion(forward, backward, n) for n in input_names]
    conversions.append(CatalyzedConversion(backward, forward, bias_name))
    return GateComponents(
        pair=pair,
        enzymes=tuple(enzymes),
        conversions=tuple(conversions),
        output=SpeciesRef(substrate, output_slot(params)),
    )


def single_gate_network(params, inputs, initial=0.5):
    """
    Stand-alone network of one gate with canonical species names
    (S1, S1p, E1, P1 or S2, S2p, E2, E3, P2).

    Parameters:
        params (NotGateParams | TwoInputGateParams): Gate parameters.
        inputs (sequence): Schedule or constant level per input enzyme.
        initial (float): Initial substrate fraction.

    Returns:
        tuple[ReactionNetwork, SpeciesRef]: The network and its output species.
    """
    names = canonical_names(params)
    gate = build_gate(
        params, names["substrate"], names["product"], names["inputs"], names["bias"], inputs, initial
    )
    network = ReactionNetwork((gate.pair,), gate.conversions, gate.enzymes)
    return network, gate.output


def output_name(network, ref):
    pair = network.pair(ref.pair)
    return pair.substrate_name if ref.slot == "substrate" else pair.product_name
