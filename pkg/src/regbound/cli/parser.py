"""Reader and writer for ideal source files.

    file   := "ring" field "[" ident ("," ident)* "]" ";" "ideal" poly ("," poly)* ";"
    field  := "QQ" | "GF(" INT ")"
    poly   := usual +, -, *, ^ expressions over integer literals and variables

Division by a nonzero integer constant is also accepted, so QQ coefficients
such as (3/4)*x round-trip. Whitespace and "#" comments are ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from regbound.algebra.field import FieldSpec, QQ, is_prime
from regbound.algebra.polynomial import Polynomial
from regbound.errors import FieldError, InputError
from regbound.groebner.ideal import HomogeneousIdeal
from regbound.monomial.ideal import MonomialIdeal

_TOKEN = re.compile(r"(#[^\n]*)|(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S)")
KEYWORDS = {"ring", "ideal", "QQ", "GF"}


@dataclass(frozen=True)
class Token:
    kind: str     # int, ident, op, end
    text: str
    line: int
    column: int


def tokenize(text):
    tokens = []
    pos, line, line_start = 0, 1, 0
    while True:
        while pos < len(text) and text[pos].isspace():
            if text[pos] == "\n":
                line, line_start = line + 1, pos + 1
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        col = pos - line_start + 1
        if m.group(2) is not None:
            tokens.append(Token("int", m.group(2), line, col))
        elif m.group(3) is not None:
            tokens.append(Token("ident", m.group(3), line, col))
        elif m.group(4) is not None:
            tokens.append(Token("op", m.group(4), line, col))
        pos = m.end()
    tokens.append(Token("end", "", line, pos - line_start + 1))
    return tokens


@dataclass(frozen=True)
class IdealSource:
    field: FieldSpec
    variables: tuple
    generators: tuple     # expanded Polynomials (zero generators dropped)

    @property
    def n(self):
        return len(self.variables)

    def to_ideal(self) -> HomogeneousIdeal:
        return HomogeneousIdeal(list(self.generators), self.n, self.field)

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.generators)

    def to_monomial(self) -> MonomialIdeal:
        if not self.is_monomial():
            raise InputError("syntax", "ideal is not generated by monomials")
        return MonomialIdeal([next(iter(g.terms)) for g in self.generators], self.n)


class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.i = 0
        self.field = QQ
        self.names = {}

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, code, msg, tok=None):
        tok = tok or self.peek()
        return InputError(code, msg, tok.line, tok.column)

    def expect(self, text):
        tok = self.next()
        if tok.text != text:
            shown = tok.text or "end of input"
            raise self.error("syntax", f"expected {text!r}, found {shown!r}", tok)
        return tok

    def parse_file(self):
        self.expect("ring")
        self.parse_field()
        self.expect("[")
        names = []
        while True:
            tok = self.next()
            if tok.kind != "ident" or tok.text in KEYWORDS:
                raise self.error("syntax", f"expected a variable name, found {tok.text!r}", tok)
            if tok.text in names:
                raise self.error("syntax", f"variable {tok.text!r} declared twice", tok)
            names.append(tok.text)
            if self.peek().text == ",":
                self.next()
                continue
            break
        self.expect("]")
        self.expect(";")
        self.names = {v: k for k, v in enumerate(names)}
        self.n = len(names)
        self.expect("ideal")
        gens = []
        while True:
            start = self.peek()
            poly = self.parse_expr()
            if not poly.is_homogeneous():
                raise self.error("inhomogeneous", "generator is not homogeneous", start)
            gens.append(poly)
            if self.peek().text == ",":
                self.next()
                continue
            break
        self.expect(";")
        if self.peek().kind != "end":
            raise self.error("syntax", f"unexpected {self.peek().text!r} after ideal")
        gens = tuple(g for g in gens if not g.is_zero())
        return IdealSource(self.field, tuple(names), gens)

    def parse_field(self):
        tok = self.next()
        if tok.text == "QQ":
            self.field = QQ
            return
        if tok.text != "GF":
            raise self.error("syntax", f"expected QQ or GF(p), found {tok.text!r}", tok)
        self.expect("(")
        num = self.next()
        if num.kind != "int":
            raise self.error("syntax", "expected a prime after GF(", num)
        p = int(num.text)
        if not is_prime(p) or p >= 2**31:
            raise self.error("field", f"{p} is not a prime below 2^31", num)
        self.expect(")")
        try:
            self.field = FieldSpec(p)
        except FieldError as exc:
            raise self.error("field", str(exc), num) from None

    def const(self, c):
        return Polynomial.constant(c, self.n, self.field)

    def parse_expr(self):
        out = self.parse_term()
        while self.peek().text in "+-" and self.peek().kind == "op":
            op = self.next().text
            rhs = self.parse_term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def parse_term(self):
        out = self.parse_unary()
        while self.peek().kind == "op" and self.peek().text in ("*", "/"):
            op = self.next()
            rhs = self.parse_unary()
            if op.text == "*":
                out = out * rhs
            else:
                if rhs.degree() > 0 or rhs.is_zero():
                    raise self.error("syntax", "division only by a nonzero constant", op)
                c = rhs.coefficient((0,) * self.n)
                out = out.scale(self.field.inv(c))
        return out

    def parse_unary(self):
        tok = self.peek()
        if tok.kind == "op" and tok.text in "+-":
            self.next()
            inner = self.parse_unary()
            return -inner if tok.text == "-" else inner
        return self.parse_power()

    def parse_power(self):
        base = self.parse_atom()
        if self.peek().text == "^":
            self.next()
            tok = self.next()
            if tok.kind != "int":
                raise self.error("syntax", "exponent must be a non-negative integer", tok)
            base = base ** int(tok.text)
        return base

    def parse_atom(self):
        tok = self.next()
        if tok.kind == "int":
            return self.const(int(tok.text))
        if tok.kind == "ident":
            if tok.text not in self.names:
                raise self.error("unknown-variable", f"unknown variable {tok.text!r}", tok)
            return Polynomial.variable(self.names[tok.text], self.n, self.field)
        if tok.text == "(":
            inner = self.parse_expr()
            self.expect(")")
            return inner
        shown = tok.text or "end of input"
        raise self.error("syntax", f"unexpected {shown!r}", tok)


def parse_ideal_source(text: str) -> IdealSource:
    return _Parser(text).parse_file()


def emit(source: IdealSource) -> str:
    """Text that parses back to an equal IdealSource."""
    names = list(source.variables)
    gens = ", ".join(g.to_string(names) for g in source.generators) or "0"
    return f"ring {source.field}[{','.join(names)}];\nideal {gens};\n"


def source_from_ideal(I, names=None) -> IdealSource:
    """Wrap a HomogeneousIdeal or MonomialIdeal for emission."""
    if isinstance(I, MonomialIdeal):
        I = HomogeneousIdeal.from_monomial(I)
    names = tuple(names or (f"x{i + 1}" for i in range(I.n)))
    return IdealSource(I.field, names, tuple(I.generators))


def ideal_text(I, names=None) -> str:
    return emit(source_from_ideal(I, names))
