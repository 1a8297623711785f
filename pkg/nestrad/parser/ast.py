from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Literal:
    value: Fraction


@dataclass(frozen=True)
class Root:
    degree: int
    body: ExprAst


@dataclass(frozen=True)
class Sum:
    left: ExprAst
    right: ExprAst


@dataclass(frozen=True)
class Difference:
    left: ExprAst
    right: ExprAst


@dataclass(frozen=True)
class Product:
    left: ExprAst
    right: ExprAst


@dataclass(frozen=True)
class Quotient:
    left: ExprAst
    right: ExprAst


@dataclass(frozen=True)
class Negation:
    operand: ExprAst


@dataclass(frozen=True)
class Power:
    base: ExprAst
    exponent: int


ExprAst = Literal | Root | Sum | Difference | Product | Quotient | Negation | Power

BINARY_SYMBOLS: dict[type, str] = {Sum: "+", Difference: "-", Product: "*", Quotient: "/"}


def to_text(node: ExprAst) -> str:
    """Fully parenthesized rendering of an AST, in the input language."""
    match node:
        case Literal(value):
            return str(value)
        case Root(degree, body):
            return f"root({degree}, {to_text(body)})"
        case Negation(operand):
            return f"-({to_text(operand)})"
        case Power(base, exponent):
            return f"({to_text(base)})^({exponent}/1)"
        case Sum(left, right) | Difference(left, right) | Product(left, right) | Quotient(
            left, right
        ):
            return f"({to_text(left)} {BINARY_SYMBOLS[type(node)]} {to_text(right)})"
    raise TypeError(f"unknown node {node!r}")
