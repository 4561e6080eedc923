"""
Boolean expression trees over input variables with NOT, AND and OR nodes.

Expressions are parsed with Python's ``ast`` module, so both operator syntax
(``a and not b or c``) and call syntax (``OR(AND(a, NOT(b)), c)``) are
accepted. NAND and XOR calls are sugar expanded into NOT/AND/OR.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass

from circuit.errors import ExpressionError


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Not:
    operand: BooleanExpr

    def __str__(self):
        return f"NOT({self.operand})"


@dataclass(frozen=True)
class And:
    left: BooleanExpr
    right: BooleanExpr

    def __str__(self):
        return f"AND({self.left}, {self.right})"


@dataclass(frozen=True)
class Or:
    left: BooleanExpr
    right: BooleanExpr

    def __str__(self):
        return f"OR({self.left}, {self.right})"


BooleanExpr = Var | Not | And | Or


def nand(a, b):
    return Not(And(a, b))


def xor(a, b):
    return Or(And(a, Not(b)), And(Not(a), b))


def variables(expr):
    """Sorted tuple of the variable names an expression uses."""
    found = set()
    stack = [expr]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            found.add(node.name)
        elif isinstance(node, Not):
            stack.append(node.operand)
        else:
            stack += [node.left, node.right]
    return tuple(sorted(found))


def depth(expr):
    """Operator depth; a bare variable has depth 0."""
    if isinstance(expr, Var):
        return 0
    if isinstance(expr, Not):
        return 1 + depth(expr.operand)
    return 1 + max(depth(expr.left), depth(expr.right))


def check_declared(expr, declared):
    undeclared = sorted(set(variables(expr)) - set(declared))
    if undeclared:
        raise ExpressionError(f"undeclared variable(s): {', '.join(undeclared)}")


# =============================================================
# Parsing
# =============================================================
_CALLS = {
    "NOT": (1, lambda a: Not(a)),
    "AND": (2, And),
    "OR": (2, Or),
    "NAND": (2, nand),
    "XOR": (2, xor),
}


def _fold(op, operands):
    result = operands[0]
    for operand in operands[1:]:
        result = op(result, operand)
    return result


def _convert(node):
    if isinstance(node, ast.Name):
        if node.id.upper() in _CALLS:
            raise ExpressionError(f"operator {node.id} used as a variable")
        return Var(node.id)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.Not, ast.Invert)):
        return Not(_convert(node.operand))
    if isinstance(node, ast.BoolOp):
        op = And if isinstance(node.op, ast.And) else Or
        return _fold(op, [_convert(v) for v in node.values])
    if isinstance(node, ast.BinOp) and isinstance(node.op, (ast.BitAnd, ast.BitOr, ast.BitXor)):
        op = {ast.BitAnd: And, ast.BitOr: Or, ast.BitXor: xor}[type(node.op)]
        return op(_convert(node.left), _convert(node.right))
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name):
        name = node.func.id.upper()
        if name not in _CALLS:
            raise ExpressionError(f"unknown operator {node.func.id}")
        arity, build = _CALLS[name]
        args = [_convert(a) for a in node.args]
        if arity == 1:
            if len(args) != 1:
                raise ExpressionError(f"{name} takes one argument, got {len(args)}")
            return build(args[0])
        if len(args) < 2:
            raise ExpressionError(f"{name} takes at least two arguments, got {len(args)}")
        if name in ("AND", "OR"):
            return _fold(build, args)
        if len(args) != 2:
            raise ExpressionError(f"{name} takes two arguments, got {len(args)}")
        return build(*args)
    raise ExpressionError(f"unsupported syntax: {ast.dump(node)}")


def parse_expr(text, declared=None):
    """
    Parse an expression string.

    Parameters:
        text (str): e.g. ``"NOT(AND(a, b))"`` or ``"not (a and b)"``.
        declared (iterable of str, optional): Allowed variable names.

    Returns:
        BooleanExpr: The expression tree.
    """
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as e:
        raise ExpressionError(f"cannot parse expression {text!r}: {e.msg}") from None
    expr = _convert(tree.body)
    if declared is not None:
        check_declared(expr, declared)
    return expr


# =============================================================
# Corpus
# =============================================================
def _truth_key(expr, names):
    # late import: oracle evaluates circuit expressions
    from oracle.boolean import truth_table

    return tuple(truth_table(expr, names).values())


def expression_corpus(names=("a", "b", "c"), max_depth=3):
    """
    Deterministic expression corpus over ``names`` up to ``max_depth``.

    Expressions are built bottom-up (NOT of the previous level, AND/OR of
    every unordered pair reaching the new depth). Only the first expression
    found for each distinct Boolean function over ``names`` is kept.

    Returns:
        list[BooleanExpr]: Corpus in generation order (shallowest first).
    """
    names = tuple(names)
    seen = {}
    by_depth = [[]]
    for name in names:
        expr = Var(name)
        key = _truth_key(expr, names)
        if key not in seen:
            seen[key] = expr
            by_depth[0].append(expr)

    for d in range(1, max_depth + 1):
        previous = by_depth[d - 1]
        pool = [e for level in by_depth for e in level]
        candidates = [Not(e) for e in previous]
        for i, left in enumerate(pool):
            for right in pool[i:]:
                if max(depth(left), depth(right)) != d - 1:
                    continue
                candidates += [And(left, right), Or(left, right)]
        level = []
        for expr in candidates:
            key = _truth_key(expr, names)
            if key not in seen:
                seen[key] = expr
                level.append(expr)
        by_depth.append(level)
    return [e for level in by_depth for e in level]
