# cuspworks/core/poly_parser.py
"""
Text grammar for polynomials over Q(eps), shared by the library and the CLI.

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/")? unary)*        juxtaposition multiplies
    unary  := ("+" | "-") unary | power
    power  := atom (("^" | "**") ["-"] INT)?
    atom   := NUMBER | NAME | "(" expr ")"

``eps`` (or the Unicode letter) is the cube root of unity; Greek parameter
letters are accepted and mapped to their ASCII names.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .cyclo_arith import EPS, CycloNumber
from .errors import CuspworksError, ParseError
from .poly_core import Polynomial, VarTable

logger = logging.getLogger(__name__)

UNICODE_NAMES = {
    "λ": "lambda",
    "μ": "mu",
    "ν": "nu",
    "σ": "sigma",
    "α": "alpha",
    "β": "beta",
    "γ": "gamma",
    "ξ": "xi",
    "υ": "upsilon",
}
EPS_NAMES = frozenset({"eps", "ε"})


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op", "end"
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit() or (ch == "." and i + 1 < len(text) and text[i + 1].isdigit()):
            start = i
            while i < len(text) and (text[i].isdigit() or text[i] == "."):
                i += 1
            tokens.append(Token("num", text[start:i], start))
        elif ch.isalpha() or ch == "_":
            start = i
            while i < len(text) and (text[i].isalnum() or text[i] == "_"):
                i += 1
            name = text[start:i]
            tokens.append(Token("name", UNICODE_NAMES.get(name, name), start))
        elif text.startswith("**", i):
            tokens.append(Token("op", "^", i))
            i += 2
        elif ch in "+-*/^()":
            tokens.append(Token("op", ch, i))
            i += 1
        elif ch in "−·":
            # typographic minus and middle dot
            tokens.append(Token("op", "-" if ch == "−" else "*", i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token], table: VarTable):
        self.tokens = tokens
        self.pos = 0
        self.table = table

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, text: str) -> None:
        if self.current.kind != "op" or self.current.text != text:
            raise ParseError(f"expected {text!r}", self.current.position)
        self.advance()

    def parse(self) -> Polynomial:
        value = self.expr()
        if self.current.kind != "end":
            raise ParseError(f"unexpected {self.current.text!r}", self.current.position)
        return value

    def expr(self) -> Polynomial:
        value = self.term()
        while self.current.kind == "op" and self.current.text in "+-":
            op = self.advance().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _starts_factor(self) -> bool:
        token = self.current
        return token.kind in ("num", "name") or (token.kind == "op" and token.text == "(")

    def term(self) -> Polynomial:
        value = self.unary()
        while True:
            token = self.current
            if token.kind == "op" and token.text in "*/":
                self.advance()
                rhs = self.unary()
                value = self._divide(value, rhs, token) if token.text == "/" else value * rhs
            elif self._starts_factor():
                value = value * self.unary()
            else:
                return value

    def _divide(self, lhs: Polynomial, rhs: Polynomial, token: Token) -> Polynomial:
        if rhs.is_zero():
            raise ParseError("division by zero", token.position)
        try:
            return lhs / rhs
        except CuspworksError:
            raise ParseError("division by a non-unit expression", token.position) from None

    def unary(self) -> Polynomial:
        token = self.current
        if token.kind == "op" and token.text in "+-":
            self.advance()
            value = self.unary()
            return -value if token.text == "-" else value
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.current.kind == "op" and self.current.text == "^":
            caret = self.advance()
            sign = 1
            if self.current.kind == "op" and self.current.text == "-":
                self.advance()
                sign = -1
            token = self.current
            if token.kind != "num" or not token.text.isdigit():
                raise ParseError("exponent must be an integer", token.position)
            self.advance()
            try:
                return base ** (sign * int(token.text))
            except CuspworksError:
                raise ParseError("negative power of a non-unit", caret.position) from None
        return base

    def atom(self) -> Polynomial:
        token = self.current
        if token.kind == "num":
            self.advance()
            try:
                value = Fraction(token.text)
            except ValueError:
                raise ParseError(f"malformed number {token.text!r}", token.position) from None
            return Polynomial.constant(self.table, value)
        if token.kind == "name":
            self.advance()
            if token.text in EPS_NAMES:
                return Polynomial.constant(self.table, EPS)
            if token.text not in self.table:
                raise ParseError(f"unknown variable {token.text!r}", token.position)
            return Polynomial.variable(self.table, token.text)
        if token.kind == "op" and token.text == "(":
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        if token.kind == "end":
            raise ParseError("unexpected end of input", token.position)
        raise ParseError(f"unexpected {token.text!r}", token.position)


def variables_in_order(text: str) -> tuple[str, ...]:
    """Variable names in order of first appearance."""
    seen: dict[str, None] = {}
    for token in tokenize(text):
        if token.kind == "name" and token.text not in EPS_NAMES:
            seen.setdefault(token.text, None)
    return tuple(seen)


def parse_polynomial(
    text: str,
    variables: Sequence[str] | VarTable | None = None,
    laurent: Sequence[str] = (),
) -> Polynomial:
    """Parse ``text`` over the given table (default: variables in order of appearance)."""
    if isinstance(variables, VarTable):
        table = variables
    else:
        names = tuple(variables) if variables is not None else variables_in_order(text)
        table = VarTable(names, frozenset(laurent))
    tokens = tokenize(text)
    result = _Parser(tokens, table).parse()
    logger.debug("Parsed %r over %s", text, table.names)
    return result


def parse_scalar(text: str) -> CycloNumber:
    """Parse a constant such as ``3``, ``-1/2`` or ``1+2*eps``."""
    return parse_polynomial(text, variables=()).constant_value()
