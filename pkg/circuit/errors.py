"""Exceptions raised by the circuit package."""


class ExpressionError(ValueError):
    """A Boolean expression is malformed or uses undeclared variables."""


class NetlistError(ValueError):
    """A netlist is structurally invalid (collisions, dangling or doubled wires, cycles)."""
