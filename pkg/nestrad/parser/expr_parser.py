"""
Recursive descent parser for the nested radical expression language.

    expr     := term (('+' | '-') term)*
    term     := unary (('*' | '/') unary)*
    unary    := '-' unary | atom ('^' '(' integer '/' integer ')')?
    atom     := rational | 'root' '(' integer ',' expr ')' | 'sqrt' '(' expr ')'
              | '(' expr ')'
    rational := integer ('/' integer)?

`sqrt(x)` is `root(2, x)` and `x^(p/q)` is `root(q, x^p)`.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from nestrad.errors import ParseError
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
)

TOKEN_PATTERN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]+)|([-+*/^(),]))")
FUNCTIONS = ("root", "sqrt")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op" or "end"
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = TOKEN_PATTERN.match(text, position)
        if match is None:
            offset = position + len(text[position:]) - len(text[position:].lstrip())
            raise ParseError(f"unexpected character {text[offset]!r}", offset, text)
        integer, name, op = match.groups()
        start = match.start(match.lastindex or 0)
        if integer is not None:
            tokens.append(Token("int", integer, start))
        elif name is not None:
            if name not in FUNCTIONS:
                raise ParseError(f"unknown name {name!r}", start, text)
            tokens.append(Token("name", name, start))
        else:
            tokens.append(Token("op", op, start))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class ExpressionParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    def parse(self) -> ExprAst:
        node = self._expr()
        token = self._peek()
        if token.kind != "end":
            self._fail(f"unexpected {token.text!r}", token)
        return node

    def _peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def _advance(self) -> Token:
        token = self._peek()
        self.index += 1
        return token

    def _is_op(self, symbol: str, offset: int = 0) -> bool:
        token = self._peek(offset)
        return token.kind == "op" and token.text == symbol

    def _expect(self, symbol: str) -> Token:
        if not self._is_op(symbol):
            token = self._peek()
            found = "end of input" if token.kind == "end" else repr(token.text)
            self._fail(f"expected {symbol!r}, found {found}", token)
        return self._advance()

    def _integer(self) -> tuple[int, Token]:
        token = self._peek()
        if token.kind != "int":
            self._fail("expected an integer", token)
        self._advance()
        return int(token.text), token

    def _fail(self, message: str, token: Token):
        raise ParseError(message, token.position, self.text)

    def _expr(self) -> ExprAst:
        node = self._term()
        while self._is_op("+") or self._is_op("-"):
            op = self._advance().text
            right = self._term()
            node = Sum(node, right) if op == "+" else Difference(node, right)
        return node

    def _term(self) -> ExprAst:
        node = self._unary()
        while self._is_op("*") or self._is_op("/"):
            op = self._advance().text
            right = self._unary()
            node = Product(node, right) if op == "*" else Quotient(node, right)
        return node

    def _unary(self) -> ExprAst:
        if self._is_op("-"):
            self._advance()
            return Negation(self._unary())
        node = self._atom()
        if self._is_op("^"):
            self._advance()
            self._expect("(")
            negative = self._is_op("-")
            if negative:
                self._advance()
            p, _ = self._integer()
            self._expect("/")
            q, q_token = self._integer()
            self._expect(")")
            if q == 0:
                self._fail("zero denominator in exponent", q_token)
            p = -p if negative else p
            if q == 1:
                return Power(node, p)
            return Root(q, node if p == 1 else Power(node, p))
        return node

    def _atom(self) -> ExprAst:
        token = self._peek()
        if token.kind == "int":
            numerator, _ = self._integer()
            # a literal fraction only when '/' is directly followed by an integer
            if self._is_op("/") and self._peek(1).kind == "int":
                self._advance()
                denominator, den_token = self._integer()
                if denominator == 0:
                    self._fail("zero denominator in literal", den_token)
                return Literal(Fraction(numerator, denominator))
            return Literal(Fraction(numerator))
        if token.kind == "name" and token.text == "root":
            self._advance()
            self._expect("(")
            degree, degree_token = self._integer()
            if degree < 2:
                self._fail("root degree must be at least 2", degree_token)
            self._expect(",")
            body = self._expr()
            self._expect(")")
            return Root(degree, body)
        if token.kind == "name" and token.text == "sqrt":
            self._advance()
            self._expect("(")
            body = self._expr()
            self._expect(")")
            return Root(2, body)
        if self._is_op("("):
            self._advance()
            node = self._expr()
            self._expect(")")
            return node
        found = "end of input" if token.kind == "end" else repr(token.text)
        self._fail(f"unexpected {found}", token)
        raise AssertionError("unreachable")


def parse(text: str) -> ExprAst:
    """
    Parse an expression into an AST.

    Raises:
        ParseError: syntax error or zero denominator, with the offending position
    """
    return ExpressionParser(text).parse()
