"""Polynomial text grammar.

Variables match ``[a-z][a-z0-9_]*``; integer literals; ``+ - * ^`` and
parentheses. Juxtaposition multiplies (``2y`` is ``2*y``). ``a/b`` between
integer literals is accepted so rational coefficients round-trip.
"""

from __future__ import annotations

import difflib
import re
from dataclasses import dataclass
from fractions import Fraction

from ..errors import GrammarError

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r\n]+)|(?P<comment>#[^\n]*)|(?P<int>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*^()\[\],;=/{}:.])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "ident", "op", "eof"
    text: str
    offset: int
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    line, line_start = 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise GrammarError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), pos, line, pos - line_start + 1))
        chunk = m.group()
        nl = chunk.count("\n")
        if nl:
            line += nl
            line_start = pos + chunk.rfind("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", pos, line, pos - line_start + 1))
    return tokens


class TokenStream:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.peek
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise GrammarError(f"{message}, found {found}", tok.line, tok.column)

    def at(self, text: str) -> bool:
        t = self.peek
        return t.kind in ("op", "ident") and t.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.error(f"expected {text!r}")
        return self.next()

    def expect_kind(self, kind: str, what: str) -> Token:
        if self.peek.kind != kind:
            self.error(f"expected {what}")
        return self.next()


class PolyParser:
    """Recursive descent over a token stream into polynomials of ``ring``."""

    def __init__(self, stream: TokenStream, ring):
        self.s = stream
        self.ring = ring

    def expr(self):
        s = self.s
        result = self.term()
        while s.at("+") or s.at("-"):
            op = s.next().text
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def _starts_factor(self) -> bool:
        t = self.s.peek
        return t.kind in ("int", "ident") or (t.kind == "op" and t.text == "(")

    def term(self):
        s = self.s
        result = self.unary()
        while True:
            if s.at("*"):
                s.next()
                result = result * self.unary()
            elif self._starts_factor():
                result = result * self.power()
            else:
                return result

    def unary(self):
        s = self.s
        if s.at("-"):
            s.next()
            return -self.unary()
        if s.at("+"):
            s.next()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.s.at("^"):
            self.s.next()
            tok = self.s.expect_kind("int", "integer exponent")
            return base ** int(tok.text)
        return base

    def atom(self):
        s = self.s
        t = s.peek
        if t.kind == "int":
            s.next()
            value = Fraction(int(t.text))
            if s.at("/"):
                s.next()
                d = s.expect_kind("int", "integer denominator")
                if int(d.text) == 0:
                    raise GrammarError("division by zero", d.line, d.column)
                value = value / int(d.text)
            return self._const(value, t)
        if t.kind == "ident":
            s.next()
            if t.text not in self.ring.vars:
                hint = difflib.get_close_matches(t.text, self.ring.vars, n=1)
                extra = f" (did you mean {hint[0]!r}?)" if hint else ""
                raise GrammarError(f"unknown variable {t.text!r}{extra}", t.line, t.column)
            return self.ring.var(t.text)
        if t.kind == "op" and t.text == "(":
            s.next()
            e = self.expr()
            s.expect(")")
            return e
        s.error("expected a polynomial term")

    def _const(self, value: Fraction, tok: Token):
        field = self.ring.field
        if field.p:
            num = value.numerator % field.p
            den = value.denominator % field.p
            if den == 0:
                raise GrammarError(f"denominator divisible by {field.p}", tok.line, tok.column)
            return self.ring.const(num * field.inv(den))
        return self.ring.const(value)


def parse_poly(text: str, ring):
    s = TokenStream(tokenize(text))
    f = PolyParser(s, ring).expr()
    if s.peek.kind != "eof":
        s.error("unexpected trailing input")
    return f
