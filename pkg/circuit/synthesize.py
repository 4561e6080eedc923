"""
Boolean expression -> biochemical gate netlist.

``direct`` maps each NOT/AND/OR node to one gate with default parameters.
``nand_only`` first rewrites the expression into NAND form and realises
every NAND as an AND gate whose output drives a NOT gate. Identical
subexpressions share one gate in both styles.
"""

from __future__ import annotations

import logging

from circuit.errors import ExpressionError
from circuit.expr import And, Not, Or, Var, check_declared, nand, variables
from circuit.netlist import Coupling, GateInstance, Netlist
from gates.params import GateKind, default_params

logger = logging.getLogger(__name__)

STYLES = ("direct", "nand_only")


def to_nand_form(expr):
    """
    Rewrite an expression so that every operator is ``NOT(AND(x, y))``.

    NOT(AND(x, y)) = NAND(x, y); NOT(NOT(x)) = x; NOT x = NAND(x, x);
    AND(x, y) = NAND(n, n) with n = NAND(x, y);
    OR(x, y) = NAND(NAND(x, x), NAND(y, y)).
    """
    memo = {}

    def rewrite(node):
        if node in memo:
            return memo[node]
        if isinstance(node, Var):
            out = node
        elif isinstance(node, Not) and isinstance(node.operand, And):
            out = nand(rewrite(node.operand.left), rewrite(node.operand.right))
        elif isinstance(node, Not) and isinstance(node.operand, Not):
            out = rewrite(node.operand.operand)
        elif isinstance(node, Not):
            x = rewrite(node.operand)
            out = nand(x, x)
        elif isinstance(node, And):
            n = nand(rewrite(node.left), rewrite(node.right))
            out = nand(n, n)
        elif isinstance(node, Or):
            x, y = rewrite(node.left), rewrite(node.right)
            out = nand(nand(x, x), nand(y, y))
        else:
            raise ExpressionError(f"not a Boolean expression: {node!r}")
        memo[node] = out
        return out

    return rewrite(expr)


def _is_nand(node):
    return isinstance(node, Not) and isinstance(node.operand, And)


class _Builder:
    def __init__(self):
        self.gates = []
        self.wires = []
        self.sources = {}

    def add(self, kind, drivers):
        gate = GateInstance(f"g{len(self.gates) + 1}", default_params(kind))
        self.gates.append(gate)
        self.wires += [Coupling(src, slot) for src, slot in zip(drivers, gate.inputs)]
        return gate.id

    def direct(self, node):
        if node in self.sources:
            return self.sources[node]
        if isinstance(node, Var):
            out = node.name
        elif isinstance(node, Not):
            out = self.add(GateKind.NOT, [self.direct(node.operand)])
        else:
            kind = GateKind.AND if isinstance(node, And) else GateKind.OR
            out = self.add(kind, [self.direct(node.left), self.direct(node.right)])
        self.sources[node] = out
        return out

    def nand_only(self, node):
        if node in self.sources:
            return self.sources[node]
        if isinstance(node, Var):
            out = node.name
        elif _is_nand(node):
            a = self.nand_only(node.operand.left)
            b = self.nand_only(node.operand.right)
            out = self.add(GateKind.NOT, [self.add(GateKind.AND, [a, b])])
        else:
            raise ExpressionError(f"expression is not in NAND form: {node}")
        self.sources[node] = out
        return out


def synthesize(expr, style="direct", declared=None, output="f"):
    """
    Build a netlist computing ``expr``.

    Parameters:
        expr (BooleanExpr): Expression tree.
        style (str): ``"direct"`` or ``"nand_only"``.
        declared (iterable of str, optional): Declared input variables; the
            primary inputs of the netlist. Defaults to the expression's own
            variables.
        output (str): Name of the single primary output.

    Returns:
        Netlist: Combinational netlist; a bare variable yields zero gates
        with the output wired straight to the input.

    Raises:
        ExpressionError: On undeclared variables or an unknown style.
    """
    if style not in STYLES:
        raise ExpressionError(f"unknown synthesis style {style!r}; expected one of {STYLES}")
    inputs = tuple(variables(expr) if declared is None else declared)
    check_declared(expr, inputs)

    builder = _Builder()
    if style == "direct":
        source = builder.direct(expr)
    else:
        source = builder.nand_only(to_nand_form(expr))
    logger.debug("synthesized %s (%s): %d gates", expr, style, len(builder.gates))
    return Netlist(
        gates=builder.gates,
        wires=builder.wires,
        primary_inputs=inputs,
        primary_outputs=((output, source),),
    )
