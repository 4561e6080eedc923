"""
Line-based netlist text format.

    # comment
    SEQUENTIAL
    INPUT <name>
    GATE <id> <NOT|AND|OR> in1=<k_cat>/<K_m> [in2=<k_cat>/<K_m>] bias=<k_cat>/<K_m>
         level=<[P]> [s0=<initial>] [names=<S>,<Sp>,<E...>,<P>]
    WIRE <source> -> <enzyme>
    OUTPUT <name> = <source>

Numbers are written with ``repr`` so a dump parses back to an equal netlist.
"""

from __future__ import annotations

from circuit.errors import NetlistError
from circuit.netlist import Coupling, GateInstance, Netlist
from gates.errors import GateParameterError
from gates.params import EnzymeKinetics, GateKind, NotGateParams, TwoInputGateParams


def _kinetics(k):
    return f"{k.k_cat!r}/{k.k_m!r}"


def dump_gate(gate):
    p = gate.params
    if gate.kind is GateKind.NOT:
        rates = [f"in1={_kinetics(p.input_enzyme)}"]
    else:
        rates = [f"in1={_kinetics(p.input_a)}", f"in2={_kinetics(p.input_b)}"]
    names = ",".join(gate.names())
    return " ".join([
        "GATE", gate.id, gate.kind.value, *rates,
        f"bias={_kinetics(p.bias_enzyme)}", f"level={p.bias_level!r}",
        f"s0={gate.initial!r}", f"names={names}",
    ])


def dump_netlist(netlist):
    """Netlist as text, one declaration per line, trailing newline included."""
    lines = []
    if netlist.sequential:
        lines.append("SEQUENTIAL")
    lines += [f"INPUT {name}" for name in netlist.primary_inputs]
    lines += [dump_gate(gate) for gate in netlist.gates]
    lines += [f"WIRE {wire.source} -> {wire.destination}" for wire in netlist.wires]
    lines += [f"OUTPUT {name} = {source}" for name, source in netlist.primary_outputs]
    return "\n".join(lines) + "\n"


def _parse_kinetics(value, where):
    try:
        k_cat, k_m = value.split("/")
        return EnzymeKinetics(float(k_cat), float(k_m))
    except ValueError as e:
        raise NetlistError(f"{where}: bad rate {value!r} ({e})") from None


def _parse_gate(tokens, where):
    if len(tokens) < 3:
        raise NetlistError(f"{where}: GATE needs an id and a kind")
    gate_id, kind_name = tokens[1], tokens[2].upper()
    try:
        kind = GateKind(kind_name)
    except ValueError:
        raise NetlistError(f"{where}: unknown gate kind {tokens[2]!r}") from None

    fields = {}
    for token in tokens[3:]:
        key, sep, value = token.partition("=")
        if not sep:
            raise NetlistError(f"{where}: expected key=value, got {token!r}")
        if key in fields:
            raise NetlistError(f"{where}: {key} given twice")
        fields[key] = value

    rate_keys = ("in1", "bias") if kind is GateKind.NOT else ("in1", "in2", "bias")
    allowed = set(rate_keys) | {"level", "s0", "names"}
    unknown = sorted(set(fields) - allowed)
    if unknown:
        raise NetlistError(f"{where}: unknown field(s) {', '.join(unknown)} for {kind.value}")
    missing = [k for k in (*rate_keys, "level") if k not in fields]
    if missing:
        raise NetlistError(f"{where}: missing field(s) {', '.join(missing)}")

    rates = {k: _parse_kinetics(fields[k], where) for k in rate_keys}
    try:
        level = float(fields["level"])
        initial = float(fields.get("s0", 0.5))
        if kind is GateKind.NOT:
            params = NotGateParams(rates["in1"], rates["bias"], level)
        else:
            params = TwoInputGateParams(kind, rates["in1"], rates["in2"], rates["bias"], level)
    except (ValueError, GateParameterError) as e:
        raise NetlistError(f"{where}: {e}") from None

    names = {}
    if "names" in fields:
        parts = fields["names"].split(",")
        if len(parts) != params.arity + 3:
            raise NetlistError(f"{where}: names needs {params.arity + 3} entries, got {len(parts)}")
        names = {
            "substrate": parts[0],
            "product": parts[1],
            "inputs": tuple(parts[2:-1]),
            "bias": parts[-1],
        }
    return GateInstance(gate_id, params, initial=initial, **names)


def parse_netlist(text):
    """
    Parse the text format back into a Netlist.

    Raises:
        NetlistError: With the offending line number.
    """
    gates, wires, inputs, outputs = [], [], [], []
    sequential = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"line {lineno}"
        tokens = line.split()
        keyword = tokens[0].upper()
        if keyword == "SEQUENTIAL" and len(tokens) == 1:
            sequential = True
        elif keyword == "INPUT" and len(tokens) == 2:
            inputs.append(tokens[1])
        elif keyword == "GATE":
            gates.append(_parse_gate(tokens, where))
        elif keyword == "WIRE" and len(tokens) == 4 and tokens[2] == "->":
            wires.append(Coupling(tokens[1], tokens[3]))
        elif keyword == "OUTPUT" and len(tokens) == 4 and tokens[2] == "=":
            outputs.append((tokens[1], tokens[3]))
        else:
            raise NetlistError(f"{where}: cannot parse {raw.strip()!r}")

    if not inputs:
        # netlists without INPUT lines take every wire source that is not a gate
        gate_ids = {g.id for g in gates}
        for source in [w.source for w in wires] + [s for _, s in outputs]:
            if source not in gate_ids and source not in inputs:
                inputs.append(source)
    return Netlist(gates, wires, inputs, outputs, sequential=sequential)


def read_netlist(path):
    with open(path) as f:
        return parse_netlist(f.read())


def write_netlist(netlist, path):
    with open(path, "w", newline="\n") as f:
        f.write(dump_netlist(netlist))
    return path
