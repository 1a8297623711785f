from dataclasses import dataclass
from fractions import Fraction

from nestrad.algebra.element import (
    RadicalElement,
    add,
    inverse,
    mul,
    neg,
    normalize_radical,
    power,
    sub,
)
from nestrad.errors import BranchError, NotFlattenableError
from nestrad.parser.ast import (
    Difference,
    ExprAst,
    Literal,
    Negation,
    Power,
    Product,
    Quotient,
    Root,
    Sum,
    to_text,
)
from nestrad.parser.expr_parser import parse


@dataclass(frozen=True)
class NestedClaim:
    """The principal real root of degree `degree` of a radical element."""

    degree: int
    radicand: RadicalElement


@dataclass(frozen=True)
class QuotientClaim:
    """The principal real root of degree `degree` of numerator / denominator."""

    degree: int
    numerator: RadicalElement
    denominator: RadicalElement

    def flatten(self) -> NestedClaim:
        return NestedClaim(self.degree, mul(self.numerator, inverse(self.denominator)))


LoweringResult = RadicalElement | NestedClaim | QuotientClaim


def root_of_rational(value: Fraction, degree: int) -> RadicalElement:
    """Principal real root of a rational; odd roots of negatives are negative."""
    if value == 0:
        return RadicalElement()
    if value > 0:
        return normalize_radical(value, degree)
    if degree % 2 == 0:
        raise BranchError(f"even root of negative rational {value}")
    return neg(normalize_radical(-value, degree))


def fold(node: ExprAst) -> RadicalElement:
    """
    Fold a flattenable AST into a single element.

    Raises:
        NotFlattenableError: a root whose body is not rational
        BranchError: even root of a negative rational
        ZeroDivisionError: division by zero
    """
    match node:
        case Literal(value):
            return RadicalElement.rational(value)
        case Root(degree, body):
            radicand = fold(body)
            if not radicand.is_rational:
                raise NotFlattenableError(to_text(node))
            return root_of_rational(radicand.rational_value(), degree)
        case Sum(left, right):
            return add(fold(left), fold(right))
        case Difference(left, right):
            return sub(fold(left), fold(right))
        case Product(left, right):
            return mul(fold(left), fold(right))
        case Quotient(left, right):
            return mul(fold(left), inverse(fold(right)))
        case Negation(operand):
            return neg(fold(operand))
        case Power(base, exponent):
            return power(fold(base), exponent)
    raise TypeError(f"unknown node {node!r}")


def lower(node: ExprAst) -> LoweringResult:
    """
    Lower an AST to an element, or to a claim when the outermost node is a root of a
    non-rational body. A root over a quotient keeps numerator and denominator apart.

    Raises:
        NotFlattenableError: an unresolvable root below the top level
        BranchError: even root of a negative rational
    """
    if isinstance(node, Root):
        if isinstance(node.body, Quotient):
            numerator = fold(node.body.left)
            denominator = fold(node.body.right)
            if denominator.is_zero:
                raise ZeroDivisionError(f"zero denominator in {to_text(node)}")
            if not (numerator.is_rational and denominator.is_rational):
                return QuotientClaim(node.degree, numerator, denominator)
            return root_of_rational(
                numerator.rational_value() / denominator.rational_value(), node.degree
            )
        radicand = fold(node.body)
        if not radicand.is_rational:
            return NestedClaim(node.degree, radicand)
        return root_of_rational(radicand.rational_value(), node.degree)
    return fold(node)


def lower_text(text: str) -> LoweringResult:
    return lower(parse(text))


def parse_element(text: str) -> RadicalElement:
    """
    Parse and lower text that must denote a single element.

    Raises:
        NotFlattenableError: the text is a nested root
    """
    result = lower_text(text)
    if not isinstance(result, RadicalElement):
        raise NotFlattenableError(text)
    return result
