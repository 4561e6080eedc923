"""Cross-coupled NOT-AND latch built from biochemical AND and NOT gates."""

from __future__ import annotations

import networkx as nx

from circuit.errors import NetlistError
from circuit.netlist import Coupling, GateInstance, Netlist
from gates.params import GateKind, default_and, default_not

LATCH_INPUTS = ("X1", "X2")
LATCH_OUTPUTS = ("Q", "Qn")

# pair initial states (A_and, A_not, B_and, B_not) storing Q = 1 or Q = 0;
# an AND pair stores its output in the product, a NOT pair in the substrate
PRESETS = {
    1: (1.0, 1.0, 0.0, 0.0),
    0: (0.0, 0.0, 1.0, 1.0),
}


def build_rs_latch(preset=None, and_params=None, not_params=None):
    """
    Active-low RS latch from two NAND stages (AND gate -> NOT gate each).

    NAND A computes Q = NAND(X1, Qn) and NAND B computes Qn = NAND(X2, Q):
    (X1, X2) = (0, 1) sets Q, (1, 0) resets it and (1, 1) holds.

    Parameters:
        preset (int, optional): 1 or 0 to start every pair on the rail of
            the stored state; by default every pair starts at s = 0.5.
        and_params (TwoInputGateParams, optional): AND-gate parameters.
        not_params (NotGateParams, optional): NOT-gate parameters.

    Returns:
        Netlist: Four gates, flagged sequential, outputs Q and Qn.
    """
    if preset is None:
        initial = (0.5,) * 4
    elif preset in PRESETS:
        initial = PRESETS[preset]
    else:
        raise NetlistError(f"latch preset must be 0 or 1, got {preset!r}")
    and_params = and_params or default_and()
    not_params = not_params or default_not()

    a_and = GateInstance("A_and", and_params, initial=initial[0])
    a_not = GateInstance("A_not", not_params, initial=initial[1])
    b_and = GateInstance("B_and", and_params, initial=initial[2])
    b_not = GateInstance("B_not", not_params, initial=initial[3])
    wires = [
        Coupling("X1", a_and.inputs[0]),
        Coupling("B_not", a_and.inputs[1]),
        Coupling("A_and", a_not.inputs[0]),
        Coupling("X2", b_and.inputs[0]),
        Coupling("A_not", b_and.inputs[1]),
        Coupling("B_and", b_not.inputs[0]),
    ]
    return Netlist(
        gates=(a_and, a_not, b_and, b_not),
        wires=wires,
        primary_inputs=LATCH_INPUTS,
        primary_outputs=(("Q", "A_not"), ("Qn", "B_not")),
        sequential=True,
    )


def cross_couplings(netlist):
    """
    Feedback wires between NAND stages: a NOT output driving an AND input
    inside the same strongly connected component.
    """
    loops = [c for c in nx.strongly_connected_components(netlist.graph) if len(c) > 1]
    owner = {slot: gate for gate in netlist.gates for slot in gate.inputs}
    couplings = []
    for wire in netlist.wires:
        if wire.source in netlist.primary_inputs:
            continue
        dest = owner[wire.destination]
        same_loop = any(wire.source in c and dest.id in c for c in loops)
        if same_loop and netlist.gate(wire.source).kind is GateKind.NOT and dest.kind is GateKind.AND:
            couplings.append(wire)
    return couplings
