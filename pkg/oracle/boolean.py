"""Ideal Boolean references for expressions and gates."""

from __future__ import annotations

import itertools

import numpy as np

from circuit.expr import And, Not, Or, Var, variables
from oracle.errors import MissingVariable


def eval_gate(kind, bits):
    """Boolean value of a NOT/AND/OR gate on 0/1 inputs."""
    kind = str(kind).upper()
    if kind == "NOT":
        (x,) = bits
        return 1 - x
    if kind == "AND":
        return int(all(bits))
    if kind == "OR":
        return int(any(bits))
    raise ValueError(f"unknown gate kind {kind!r}")


def eval_expr(expr, assignment):
    """
    Evaluate an expression under an assignment of 0/1 values.

    Parameters:
        expr (BooleanExpr): Expression tree.
        assignment (Mapping[str, int]): Value of every variable in ``expr``.

    Returns:
        int: 0 or 1.

    Raises:
        MissingVariable: If a variable has no value.
    """
    if isinstance(expr, Var):
        try:
            return 1 if assignment[expr.name] else 0
        except KeyError:
            raise MissingVariable(expr.name) from None
    if isinstance(expr, Not):
        return 1 - eval_expr(expr.operand, assignment)
    if isinstance(expr, And):
        return eval_expr(expr.left, assignment) & eval_expr(expr.right, assignment)
    if isinstance(expr, Or):
        return eval_expr(expr.left, assignment) | eval_expr(expr.right, assignment)
    raise TypeError(f"not a Boolean expression: {expr!r}")


def nand_reference(x1, x2):
    """Electronic NOT-AND output, 1 - x1*x2."""
    return 1 - x1 * x2


def assignments(names):
    """Every 0/1 assignment of ``names``, in binary counting order."""
    names = tuple(names)
    for bits in itertools.product((0, 1), repeat=len(names)):
        yield dict(zip(names, bits))


def truth_table(expr, names=None):
    """
    Truth table of ``expr`` by bit-parallel enumeration.

    All assignments are evaluated at once: each variable becomes a boolean
    column over the 2**n rows and the tree is folded with numpy operators.

    Parameters:
        expr (BooleanExpr): Expression tree.
        names (sequence of str, optional): Column order; defaults to the
            expression's own variables.

    Returns:
        dict[tuple[int, ...], int]: Output per assignment tuple, in binary
        counting order of ``names``.
    """
    names = tuple(variables(expr) if names is None else names)
    missing = set(variables(expr)) - set(names)
    if missing:
        raise MissingVariable(sorted(missing)[0])
    rows = np.array(list(itertools.product((0, 1), repeat=len(names))), dtype=bool).reshape(-1, len(names))
    columns = {name: rows[:, i] for i, name in enumerate(names)}

    def fold(node):
        if isinstance(node, Var):
            return columns[node.name]
        if isinstance(node, Not):
            return ~fold(node.operand)
        if isinstance(node, And):
            return fold(node.left) & fold(node.right)
        return fold(node.left) | fold(node.right)

    out = np.broadcast_to(fold(expr), (rows.shape[0],))
    return {tuple(int(b) for b in row): int(v) for row, v in zip(rows, out)}
