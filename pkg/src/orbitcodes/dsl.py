"""A small text language for subspaces, in the notation of the literature.

Grammar (whitespace is ignored)::

    subspace := term ("+" term)*
    term     := "span" "(" [elem ("," elem)*] ")"
              | elem "*" "F" "(" int ["," int] ")"
              | "F" "(" int ["," int] ")"
    elem     := ["-"] mono (("+" | "-") mono)*
    mono     := [int "*"] factor ("*" factor)*
    factor   := "z" ["^" int] | int | "(" elem ")" ["^" int]

``F(q)`` is GF(q) and ``F(q, s)`` is GF(q^s); the first integer must be the
tower's q.  Integer coefficients are reduced mod p and powers of z mod
q^n - 1.  Parenthesised factors and products are an extension that lets
expressions such as ``(z^2+1)*(z^3+z+1)*F(3,2)`` be written directly; an
``*`` followed by ``F`` always closes the element.

Examples::

    span(z^13, z^17, z^21, z^23)
    z^1708*F(3,2) + z^732*F(3,2) + z^91*F(3)
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DSLSyntaxError, InvalidSubfield, TowerMismatch
from .gf import FFElem, FieldTower, format_polynomial
from .subspace import Subspace, line_sum, span

_TOKEN = re.compile(r"\s*(?:(\d+)|(span\b)|(F\b)|(z\b)|([()+\-*^,]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "span", "F", "z", a punctuation char, or "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            out.append(Token("end", "", pos))
            return out
        m = _TOKEN.match(text, pos)
        if not m:
            raise DSLSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        start = m.start(m.lastindex)
        tok = m.group(m.lastindex)
        kind = {1: "int", 2: "span", 3: "F", 4: "z"}.get(m.lastindex, tok)
        out.append(Token(kind, tok, start))
        pos = m.end()


class _Parser:
    def __init__(self, text: str, tower: FieldTower):
        self.text = text
        self.tower = tower
        self.toks = tokenize(text)
        self.i = 0

    def peek(self, ahead: int = 0) -> Token:
        return self.toks[min(self.i + ahead, len(self.toks) - 1)]

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.peek()
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise DSLSyntaxError(f"{msg}, found {found}", self.text, tok.pos)

    def expect(self, kind: str, what: str | None = None) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            self.error(f"expected {what or repr(kind)}")
        self.i += 1
        return tok

    def accept(self, kind: str) -> bool:
        if self.peek().kind == kind:
            self.i += 1
            return True
        return False

    # grammar

    def subspace(self) -> Subspace:
        parts = [self.term()]
        while self.accept("+"):
            parts.append(self.term())
        self.expect("end", "'+' or end of input")
        rows = [r for p in parts for r in p.rows]
        return Subspace(self.tower, rows)

    def term(self) -> Subspace:
        tok = self.peek()
        if tok.kind == "span":
            self.i += 1
            self.expect("(")
            elems = []
            if self.peek().kind != ")":
                elems.append(self.elem())
                while self.accept(","):
                    elems.append(self.elem())
            self.expect(")", "',' or ')'")
            return span(elems, self.tower)
        if tok.kind == "F":
            return self.field_factor(self.tower.one)
        if tok.kind in ("int", "z", "(", "-"):
            e = self.elem()
            self.expect("*", "'*F(...)' after an element")
            return self.field_factor(e, tok)
        self.error("expected 'span(', 'F(' or an element")

    def field_factor(self, gen: FFElem, start: Token | None = None) -> Subspace:
        ftok = self.expect("F", "'F'")
        self.expect("(")
        qtok = self.expect("int", "an integer")
        s = 1
        if self.accept(","):
            s = int(self.expect("int", "an integer").text)
        self.expect(")", "',' or ')'")
        if int(qtok.text) != self.tower.q:
            raise TowerMismatch(
                f"F({qtok.text}) does not match the tower's q = {self.tower.q} at position {qtok.pos}"
            )
        if s < 1 or self.tower.n % s:
            raise InvalidSubfield(f"F({qtok.text},{s}) is not a subfield of GF(q^{self.tower.n}) at position {ftok.pos}")
        if gen.is_zero():
            raise DSLSyntaxError("generator of a subfield term is zero", self.text, (start or ftok).pos)
        return line_sum([(gen, s)], self.tower)

    def elem(self) -> FFElem:
        neg = self.accept("-")
        total = self.mono()
        if neg:
            total = -total
        while self.peek().kind in ("+", "-"):
            # a "+" directly before "span"/"F" belongs to the subspace level
            if self.peek(1).kind in ("span", "F"):
                break
            op = self.peek().kind
            self.i += 1
            m = self.mono()
            total = total + m if op == "+" else total - m
        return total

    def mono(self) -> FFElem:
        val = self.factor()
        while self.peek().kind == "*" and self.peek(1).kind != "F":
            self.i += 1
            val = val * self.factor()
        return val

    def factor(self) -> FFElem:
        tok = self.peek()
        t = self.tower
        if tok.kind == "int":
            self.i += 1
            return t.constant(int(tok.text))
        if tok.kind == "z":
            self.i += 1
            k = 1
            if self.accept("^"):
                k = int(self.expect("int", "an exponent").text)
            return t.power_of_z(k)
        if tok.kind == "(":
            self.i += 1
            e = self.elem()
            self.expect(")", "')'")
            if self.accept("^"):
                e = t.pow(e, int(self.expect("int", "an exponent").text))
            return e
        self.error("expected 'z', an integer or '('")


def parse_subspace(text: str, tower: FieldTower) -> Subspace:
    return _Parser(text, tower).subspace()


def parse_element(text: str, tower: FieldTower) -> FFElem:
    p = _Parser(text, tower)
    e = p.elem()
    p.expect("end", "end of input")
    return e


def format_element(a: FFElem) -> str:
    """Polynomial in z with descending powers, e.g. ``2*z^15 + z^3 + 1``."""
    return format_polynomial(a.coeffs, "z")


def format_subspace(u: Subspace) -> str:
    return "span(" + ", ".join(format_element(b) for b in u.basis_elements()) + ")"
