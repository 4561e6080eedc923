"""
Gate netlists: biochemical gate instances joined by identity couplings.

A wire runs from a source (a primary input name or a gate id, meaning that
gate's output species) to a destination input-enzyme slot of a gate. Every
input slot is driven by exactly one wire. Combinational netlists must be
acyclic; a netlist flagged ``sequential`` may contain feedback loops.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from circuit.errors import NetlistError
from gates.equilibrium import equilibrium
from gates.network import canonical_names
from gates.params import GateKind, GateParams
from oracle.boolean import eval_gate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GateInstance:
    """
    One gate with its own conserved pair and enzymes.

    Species and enzyme names default to ``<id>_S``, ``<id>_Sp``,
    ``<id>_E1``[, ``<id>_E2``] and ``<id>_P``.
    """

    id: str
    params: GateParams
    substrate: str = ""
    product: str = ""
    inputs: tuple[str, ...] = ()
    bias: str = ""
    initial: float = 0.5

    def __post_init__(self):
        if not self.id.isidentifier():
            raise NetlistError(f"gate id {self.id!r} is not an identifier")
        defaults = {
            "substrate": f"{self.id}_S",
            "product": f"{self.id}_Sp",
            "bias": f"{self.id}_P",
        }
        for attr, default in defaults.items():
            if not getattr(self, attr):
                object.__setattr__(self, attr, default)
        if not self.inputs:
            object.__setattr__(
                self, "inputs", tuple(f"{self.id}_E{i + 1}" for i in range(self.params.arity))
            )
        object.__setattr__(self, "inputs", tuple(self.inputs))
        if len(self.inputs) != self.params.arity:
            raise NetlistError(
                f"gate {self.id}: {self.kind} takes {self.params.arity} inputs, "
                f"got {len(self.inputs)} enzyme names"
            )
        if not (0.0 <= self.initial <= 1.0):
            raise NetlistError(f"gate {self.id}: initial state {self.initial} outside [0, 1]")

    @property
    def kind(self):
        return self.params.kind

    @property
    def output_slot(self):
        return "substrate" if self.kind is GateKind.NOT else "product"

    @property
    def output(self):
        """Name of the species carrying the gate's logic output."""
        return self.substrate if self.kind is GateKind.NOT else self.product

    def names(self):
        return (self.substrate, self.product, *self.inputs, self.bias)


@dataclass(frozen=True)
class Coupling:
    """Identity hand-off: ``destination`` enzyme concentration := ``source`` concentration."""

    source: str
    destination: str

    def __str__(self):
        return f"{self.source} -> {self.destination}"


@dataclass(frozen=True)
class Netlist:
    gates: tuple[GateInstance, ...]
    wires: tuple[Coupling, ...]
    primary_inputs: tuple[str, ...]
    primary_outputs: tuple[tuple[str, str], ...]
    sequential: bool = False
    _gates: dict = field(init=False, repr=False, compare=False)
    _drivers: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        object.__setattr__(self, "wires", tuple(self.wires))
        object.__setattr__(self, "primary_inputs", tuple(self.primary_inputs))
        outputs = self.primary_outputs
        if isinstance(outputs, dict):
            outputs = outputs.items()
        object.__setattr__(self, "primary_outputs", tuple((str(n), str(s)) for n, s in outputs))
        self._validate()

    def _validate(self):
        gates = {}
        for gate in self.gates:
            if gate.id in gates:
                raise NetlistError(f"duplicate gate id {gate.id!r}")
            gates[gate.id] = gate

        inputs = set()
        for name in self.primary_inputs:
            if name in inputs:
                raise NetlistError(f"duplicate primary input {name!r}")
            inputs.add(name)
            if name in gates:
                raise NetlistError(f"primary input {name!r} collides with a gate id")

        seen = {}
        for gate in self.gates:
            for name in gate.names():
                if name in seen:
                    raise NetlistError(f"name collision: {name!r} used by {seen[name]} and {gate.id}")
                seen[name] = gate.id
        species = {n for g in self.gates for n in (g.substrate, g.product)}
        clashes = sorted(inputs & species)
        if clashes:
            raise NetlistError(f"primary input(s) collide with species names: {', '.join(clashes)}")

        slots = {name: gate.id for gate in self.gates for name in gate.inputs}
        drivers = {}
        for wire in self.wires:
            if wire.source not in inputs and wire.source not in gates:
                raise NetlistError(f"dangling wire {wire}: unknown source {wire.source!r}")
            if wire.destination not in slots:
                raise NetlistError(f"dangling wire {wire}: {wire.destination!r} is not a gate input enzyme")
            if wire.destination in drivers:
                raise NetlistError(f"enzyme slot {wire.destination!r} driven by more than one wire")
            drivers[wire.destination] = wire.source
        undriven = sorted(set(slots) - set(drivers))
        if undriven:
            raise NetlistError(f"undriven enzyme slot(s): {', '.join(undriven)}")

        for name, source in self.primary_outputs:
            if source not in inputs and source not in gates:
                raise NetlistError(f"primary output {name!r} refers to unknown source {source!r}")

        object.__setattr__(self, "_gates", gates)
        object.__setattr__(self, "_drivers", drivers)

        if not self.sequential and not nx.is_directed_acyclic_graph(self.graph):
            cycle = nx.find_cycle(self.graph)
            raise NetlistError(
                "combinational netlist contains a cycle ("
                + " -> ".join(u for u, _ in cycle)
                + "); flag it sequential to allow feedback"
            )

    # ------------------------------------------------------------------
    # structure
    # ------------------------------------------------------------------
    def gate(self, gate_id):
        try:
            return self._gates[gate_id]
        except KeyError:
            raise NetlistError(f"no gate {gate_id!r}") from None

    def drivers(self, gate_id):
        """Sources of a gate's input slots, in slot order."""
        return tuple(self._drivers[slot] for slot in self.gate(gate_id).inputs)

    @property
    def outputs(self):
        return dict(self.primary_outputs)

    @cached_property
    def graph(self):
        """Directed graph over primary inputs and gate ids; edges follow the wires."""
        g = nx.DiGraph()
        g.add_nodes_from(self.primary_inputs, kind="input")
        g.add_nodes_from((gate.id for gate in self.gates), kind="gate")
        for gate in self.gates:
            for slot in gate.inputs:
                g.add_edge(self._drivers[slot], gate.id, slot=slot)
        return g

    @property
    def has_cycle(self):
        return not nx.is_directed_acyclic_graph(self.graph)

    def topological_order(self):
        """Gate ids, drivers first, ties in declaration order."""
        if self.has_cycle:
            raise NetlistError("a sequential netlist with feedback has no topological order")
        position = {gate.id: i for i, gate in enumerate(self.gates)}
        position.update({name: -1 for name in self.primary_inputs})
        order = nx.lexicographical_topological_sort(self.graph, key=lambda n: (position[n], n))
        return [n for n in order if n in self._gates]

    def levels(self):
        """Gate id -> number of gates on the longest path from a primary input (inclusive)."""
        levels = {}
        for gate_id in self.topological_order():
            levels[gate_id] = 1 + max(
                (levels.get(src, 0) for src in self.drivers(gate_id)), default=0
            )
        return levels

    def depth(self):
        """
        Gate count of the longest path through the netlist.

        For acyclic netlists this is the longest input-to-output path; with
        feedback it is the longest simple path over gates (4 for the latch).
        """
        if not self.gates:
            return 0
        if not self.has_cycle:
            return max(self.levels().values())
        gates_only = self.graph.subgraph(self._gates)
        best = 1
        for start in gates_only:
            stack = [(start, {start})]
            while stack:
                node, visited = stack.pop()
                best = max(best, len(visited))
                for nxt in gates_only.successors(node):
                    if nxt not in visited:
                        stack.append((nxt, visited | {nxt}))
        return best


# ----------------------------------------------------------------------
# static evaluation of combinational netlists
# ----------------------------------------------------------------------
def _propagate(netlist, assignment, gate_value):
    missing = [n for n in netlist.primary_inputs if n not in assignment]
    if missing:
        raise NetlistError(f"no value for primary input(s): {', '.join(missing)}")
    values = {name: assignment[name] for name in netlist.primary_inputs}
    for gate_id in netlist.topological_order():
        gate = netlist.gate(gate_id)
        values[gate_id] = gate_value(gate, [values[src] for src in netlist.drivers(gate_id)])
    return values


def _outputs(netlist, values):
    return {name: values[src] for name, src in netlist.primary_outputs}


def boolean_outputs(netlist, assignment):
    """Ideal Boolean value of every primary output under a 0/1 input assignment."""
    values = _propagate(
        netlist,
        {k: int(bool(v)) for k, v in assignment.items()},
        lambda gate, bits: eval_gate(gate.kind.value, bits),
    )
    return _outputs(netlist, values)


def equilibrium_outputs(netlist, assignment):
    """
    Steady-state concentration of every primary output.

    Gates are settled one at a time in topological order, each taking its
    drivers' equilibrium concentrations as input enzyme levels.

    Parameters:
        netlist (Netlist): Combinational netlist.
        assignment (Mapping[str, float]): Input concentrations in [0, 1].

    Returns:
        dict[str, float]: Output name -> concentration.
    """
    return _outputs(netlist, gate_equilibria(netlist, assignment))


def gate_equilibria(netlist, assignment):
    """Equilibrium output concentration of every gate (and input level), keyed by id."""
    return _propagate(
        netlist,
        {k: float(v) for k, v in assignment.items()},
        lambda gate, levels: equilibrium(gate.params, levels),
    )


def single_gate_netlist(params, initial=0.5):
    """
    One-gate netlist using the stand-alone species names (S1, S1p, E1, P1 or
    S2, S2p, E2, E3, P2); each input enzyme is a primary input of the same
    name and the output is named after the output species.
    """
    names = canonical_names(params)
    gate = GateInstance(
        "gate", params,
        substrate=names["substrate"], product=names["product"],
        inputs=names["inputs"], bias=names["bias"], initial=initial,
    )
    return Netlist(
        gates=(gate,),
        wires=[Coupling(slot, slot) for slot in gate.inputs],
        primary_inputs=gate.inputs,
        primary_outputs=((gate.output, "gate"),),
    )
