"""Precedence-climbing parser for polynomial and scalar text.

Grammar (loosest to tightest binding)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | '+' unary | power
    power   := atom ('^' unary)?
    atom    := INT | 'X' INT | 'zeta' '(' INT ')' | '(' expr ')'

Division and exponents must have constant operands; exponents must be
non-negative integers. Positions in errors are 1-based.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ArityMismatch, ExponentNegative, ParseError
from .exactnum import Cyclotomic, divide, zeta
from .multipoly import Matrix, Polynomial

_TOKEN = re.compile(r"\s*(?:(\d+)|(X\d+)|(zeta)|([-+*/^()]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "var", "zeta", "op", "end"
    text: str
    pos: int  # 1-based


def tokenize(source: str) -> list[Token]:
    tokens = []
    i = 0
    while i < len(source):
        if source[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(source, i)
        if not m:
            raise ParseError(f"unexpected character {source[i]!r}", i + 1)
        start = m.start(m.lastindex)
        kind = ("int", "var", "zeta", "op")[m.lastindex - 1]
        tokens.append(Token(kind, m.group(m.lastindex), start + 1))
        i = m.end()
    tokens.append(Token("end", "", len(source) + 1))
    return tokens


@dataclass(frozen=True)
class ParsedExpression:
    source: str
    tree: tuple

    def max_variable(self):
        return _max_var(self.tree)

    def to_polynomial(self, n=None) -> Polynomial:
        top = self.max_variable()
        if n is None:
            n = top
        elif n < top:
            raise ArityMismatch(f"expression uses X{top} but n={n}")
        return _evaluate(self.tree, n)


def _max_var(node):
    tag = node[0]
    if tag == "var":
        return node[1] + 1
    if tag in ("num", "zeta"):
        return 0
    return max(_max_var(child) for child in node[2:])


class _Parser:
    BINARY = {"+": 1, "-": 1, "*": 2, "/": 2}

    def __init__(self, source):
        self.tokens = tokenize(source)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text):
        tok = self.advance()
        if tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text or 'end of input'!r}", tok.pos)
        return tok

    def parse(self):
        tree = self.expression(1)
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.pos)
        return tree

    def expression(self, min_prec):
        lhs = self.unary()
        while True:
            tok = self.peek()
            prec = self.BINARY.get(tok.text) if tok.kind == "op" else None
            if prec is None or prec < min_prec:
                return lhs
            self.advance()
            rhs = self.expression(prec + 1)
            lhs = ({"+": "add", "-": "sub", "*": "mul", "/": "div"}[tok.text], tok.pos, lhs, rhs)

    def unary(self):
        tok = self.peek()
        if tok.kind == "op" and tok.text in "+-":
            self.advance()
            operand = self.unary()
            return ("neg", tok.pos, operand) if tok.text == "-" else operand
        return self.power()

    def power(self):
        base = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.advance()
            return ("pow", tok.pos, base, self.unary())
        return base

    def atom(self):
        tok = self.advance()
        if tok.kind == "int":
            return ("num", int(tok.text))
        if tok.kind == "var":
            idx = int(tok.text[1:])
            if idx < 1:
                raise ParseError("variables are numbered from X1", tok.pos)
            return ("var", idx - 1)
        if tok.kind == "zeta":
            self.expect("(")
            order = self.advance()
            if order.kind != "int" or int(order.text) < 1:
                raise ParseError("zeta needs a positive integer order", order.pos)
            self.expect(")")
            return ("zeta", int(order.text))
        if tok.text == "(":
            inner = self.expression(1)
            self.expect(")")
            return inner
        what = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(f"unexpected {what}", tok.pos)


def parse(source: str) -> ParsedExpression:
    return ParsedExpression(source, _Parser(source).parse())


def _constant(p: Polynomial, pos, what):
    if not p.is_homogeneous(0) and not p.is_zero():
        raise ParseError(f"{what} must be a constant", pos)
    return p.constant_term()


def _evaluate(node, n) -> Polynomial:
    tag = node[0]
    if tag == "num":
        return Polynomial.constant(n, node[1])
    if tag == "var":
        return Polynomial.variable(n, node[1])
    if tag == "zeta":
        return Polynomial.constant(n, zeta(node[1]))
    if tag == "neg":
        return -_evaluate(node[2], n)
    pos, lhs, rhs = node[1], _evaluate(node[2], n), node[3]
    if tag == "add":
        return lhs + _evaluate(rhs, n)
    if tag == "sub":
        return lhs - _evaluate(rhs, n)
    if tag == "mul":
        return lhs * _evaluate(rhs, n)
    if tag == "div":
        d = _constant(_evaluate(rhs, n), pos, "divisor")
        if d == 0:
            raise ParseError("division by zero", pos)
        return lhs.scale(divide(1, d))
    if tag == "pow":
        e = _constant(_evaluate(rhs, n), pos, "exponent")
        if isinstance(e, Cyclotomic):
            e = e.to_rational() if e.is_rational() else e
        if not isinstance(e, (int, Fraction)) or Fraction(e).denominator != 1:
            raise ParseError("exponent must be an integer", pos)
        e = int(e)
        if e < 0:
            raise ExponentNegative(f"negative exponent {e} at position {pos}")
        return lhs ** e
    raise AssertionError(f"unknown node {tag}")


def parse_polynomial(text: str, n: int | None = None) -> Polynomial:
    """Parse text into a Polynomial; n defaults to the largest variable index used."""
    return parse(text).to_polynomial(n)


def parse_scalar(text: str):
    """Parse a variable-free expression into an exact scalar."""
    expr = parse(text)
    if expr.max_variable():
        raise ParseError("scalar literal contains a variable", 1)
    return expr.to_polynomial(0).constant_term()


def parse_vector(text: str) -> tuple:
    """Comma-separated scalar literals, e.g. ``1,-1,zeta(3)``."""
    return tuple(parse_scalar(part) for part in text.split(","))


def matrix_from_json(data) -> Matrix:
    """Array of rows; entries are integers or scalar-grammar strings."""
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise ValueError("matrix JSON must be a nonempty array of rows")
    rows = [[parse_scalar(x) if isinstance(x, str) else int(x) for x in row] for row in data]
    m = Matrix(rows)
    if not m.is_square():
        raise ArityMismatch(f"matrix of shape {m.shape} is not square")
    return m


def load_matrix(path) -> Matrix:
    with open(path) as fh:
        return matrix_from_json(json.load(fh))
