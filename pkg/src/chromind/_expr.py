"""Exact evaluation of small arithmetic expressions in ``n`` and of
residue conditions on ``n``."""

from __future__ import annotations

import ast
from fractions import Fraction

CONDITIONS = ("even", "odd", "mod3=0", "mod3=1", "mod3=2")


def holds(condition: str, n: int) -> bool:
    if condition == "even":
        return n % 2 == 0
    if condition == "odd":
        return n % 2 == 1
    if condition.startswith("mod3="):
        return n % 3 == int(condition[5:])
    raise ValueError(f"unknown condition {condition!r}")


def condition_for(n: int, modulus: int) -> str:
    if modulus == 2:
        return "even" if n % 2 == 0 else "odd"
    return f"mod3={n % 3}"


def evaluate(expr: str, n: int) -> Fraction:
    """Evaluate ``expr`` (numbers, ``n``, + - * /, parentheses) exactly."""
    tree = ast.parse(expr, mode="eval")
    return _eval(tree.body, n)


def _eval(node, n):
    if isinstance(node, ast.BinOp):
        a, b = _eval(node.left, n), _eval(node.right, n)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return a * b
        if isinstance(node.op, ast.Div):
            return a / b
        if isinstance(node.op, ast.Pow) and b.denominator == 1 and b >= 0:
            return a ** int(b)
    elif isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand, n)
        return -v if isinstance(node.op, ast.USub) else v
    elif isinstance(node, ast.Constant) and isinstance(node.value, int):
        return Fraction(node.value)
    elif isinstance(node, ast.Name) and node.id == "n":
        return Fraction(n)
    raise ValueError(f"unsupported expression element: {ast.dump(node)}")
