"""One-file session format: ring, ideal and module declarations.

    ring R = F5[x,y]/(y^2 - x^3) order grevlex;
    ideal P = (x - 1, y - 1);
    module M = coker [[x, y]];
    module K = R/(x, y);
    module N = R/P;
    module F = R^2;

Ideals and modules belong to the most recently declared ring.
"""

from __future__ import annotations

import difflib
from dataclasses import dataclass, field

from .errors import GrammarError, UsageError
from .module_kernel import PresentedModule
from .module_kernel.matrix import Matrix
from .ring_kernel import Ideal, PolyRing, QuotientRing, field_from_name
from .ring_kernel.parse import PolyParser, Token, TokenStream, tokenize
from .ring_kernel.poly import format_poly

ORDERS = ("grevlex", "lex")


@dataclass
class Declaration:
    kind: str  # "ring", "ideal", "module"
    name: str
    ring: str
    value: object
    token: Token | None = None


@dataclass
class Session:
    declarations: list = field(default_factory=list)
    config: object = None
    out: str | None = None

    def _lookup(self, kind: str, name: str):
        for d in self.declarations:
            if d.kind == kind and d.name == name:
                return d
        known = [d.name for d in self.declarations if d.kind == kind]
        hint = difflib.get_close_matches(name, known, n=1, cutoff=0.5)
        extra = f" (did you mean {hint[0]!r}?)" if hint else ""
        if known:
            extra += f"; declared: {', '.join(known)}"
        raise UsageError(f"unknown {kind} {name!r}{extra}")

    def ring(self, name: str | None = None) -> QuotientRing:
        if name is None:
            rings = [d for d in self.declarations if d.kind == "ring"]
            if not rings:
                raise UsageError("session declares no ring")
            return rings[-1].value
        return self._lookup("ring", name).value

    def ideal(self, name: str) -> Ideal:
        return self._lookup("ideal", name).value

    def module(self, name: str) -> PresentedModule:
        return self._lookup("module", name).value

    def names(self, kind: str) -> list[str]:
        return [d.name for d in self.declarations if d.kind == kind]


class _SessionParser:
    def __init__(self, text: str, field_override=None, order_override=None):
        self.s = TokenStream(tokenize(text))
        self.field_override = field_override
        self.order_override = order_override
        self.session = Session()
        self.current: Declaration | None = None

    def fail(self, message: str, tok: Token):
        raise GrammarError(message, tok.line, tok.column)

    def name(self, what: str) -> Token:
        tok = self.s.expect_kind("ident", what)
        if any(d.name == tok.text for d in self.session.declarations):
            self.fail(f"name {tok.text!r} is already declared", tok)
        return tok

    def end(self):
        # a missing ';' is reported where it should have been
        if not self.s.at(";"):
            prev = self.s.tokens[self.s.i - 1]
            tok = self.s.peek
            if tok.kind == "eof" or tok.line != prev.line:
                col = prev.column + len(prev.text)
                raise GrammarError("expected ';'", prev.line, col)
            self.s.error("expected ';'")
        self.s.next()

    def parse(self) -> Session:
        s = self.s
        while s.peek.kind != "eof":
            t = s.peek
            if s.at("ring"):
                self.ring_decl()
            elif s.at("ideal"):
                self.ideal_decl()
            elif s.at("module"):
                self.module_decl()
            else:
                hint = difflib.get_close_matches(t.text, ["ring", "ideal", "module"], n=1, cutoff=0.5)
                extra = f" (did you mean {hint[0]!r}?)" if hint else ""
                s.error(f"expected a declaration{extra}")
        return self.session

    def ring_decl(self):
        s = self.s
        s.next()
        name = self.name("ring name")
        s.expect("=")
        ftok = s.expect_kind("ident", "field F<p> or Q")
        try:
            fld = field_from_name(ftok.text)
        except ValueError as e:
            self.fail(str(e), ftok)
        s.expect("[")
        variables = [s.expect_kind("ident", "variable").text]
        while s.at(","):
            s.next()
            variables.append(s.expect_kind("ident", "variable").text)
        s.expect("]")
        if len(set(variables)) != len(variables):
            self.fail("duplicate variable", ftok)
        rel_tok = s.peek
        order = "grevlex"
        # relations are parsed after the order is known
        rel_start = None
        if s.at("/"):
            s.next()
            rel_start = s.i
            self._skip_parens()
        if s.at("order"):
            s.next()
            otok = s.expect_kind("ident", "monomial order")
            if otok.text not in ORDERS:
                hint = difflib.get_close_matches(otok.text, ORDERS, n=1, cutoff=0.5)
                extra = f" (did you mean {hint[0]!r}?)" if hint else ""
                self.fail(f"unknown order {otok.text!r}{extra}", otok)
            order = otok.text
        self.end()
        if self.field_override is not None:
            fld = self.field_override
        if self.order_override is not None:
            order = self.order_override
        amb = PolyRing(variables, fld, order)
        rels = []
        if rel_start is not None:
            resume = s.i
            s.i = rel_start
            rels = self.poly_tuple(amb)
            s.i = resume
        try:
            R = QuotientRing(amb, rels, name=None)
        except UsageError as e:
            self.fail(str(e), rel_tok)
        d = Declaration("ring", name.text, name.text, R, name)
        self.session.declarations.append(d)
        self.current = d

    def _skip_parens(self):
        s = self.s
        s.expect("(")
        depth = 1
        while depth:
            t = s.next()
            if t.kind == "eof":
                s.i -= 1
                s.error("unbalanced parentheses")
            if t.text == "(":
                depth += 1
            elif t.text == ")":
                depth -= 1

    def poly_tuple(self, ring) -> list:
        s = self.s
        s.expect("(")
        p = PolyParser(s, ring)
        out = [p.expr()]
        while s.at(","):
            s.next()
            out.append(p.expr())
        s.expect(")")
        return out

    def _need_ring(self, tok: Token) -> Declaration:
        if self.current is None:
            self.fail("declare a ring first", tok)
        return self.current

    def ideal_decl(self):
        s = self.s
        kw = s.next()
        rd = self._need_ring(kw)
        name = self.name("ideal name")
        s.expect("=")
        R = rd.value
        gens = [R.reduce(g) for g in self.poly_tuple(R.ambient)]
        self.end()
        self.session.declarations.append(Declaration("ideal", name.text, rd.name, Ideal(R, gens), name))

    def module_decl(self):
        s = self.s
        kw = s.next()
        rd = self._need_ring(kw)
        R = rd.value
        name = self.name("module name")
        s.expect("=")
        t = s.peek
        if s.at("coker"):
            s.next()
            M = PresentedModule(R, self.matrix(R))
        elif t.kind == "ident":
            s.next()
            if t.text != rd.name:
                hint = difflib.get_close_matches(t.text, [rd.name, "coker"], n=1, cutoff=0.5)
                extra = f" (did you mean {hint[0]!r}?)" if hint else ""
                self.fail(f"unknown name {t.text!r}{extra}", t)
            if s.at("^"):
                s.next()
                n = s.expect_kind("int", "free rank")
                M = PresentedModule.free(R, int(n.text))
            else:
                s.expect("/")
                if s.peek.kind == "ident":
                    it = s.next()
                    ideals = [d for d in self.session.declarations if d.kind == "ideal" and d.ring == rd.name]
                    match = [d for d in ideals if d.name == it.text]
                    if not match:
                        hint = difflib.get_close_matches(it.text, [d.name for d in ideals], n=1, cutoff=0.5)
                        extra = f" (did you mean {hint[0]!r}?)" if hint else ""
                        self.fail(f"unknown ideal {it.text!r}{extra}", it)
                    gens = match[0].value.gens
                else:
                    gens = [R.reduce(g) for g in self.poly_tuple(R.ambient)]
                M = PresentedModule.cyclic(R, gens)
        else:
            s.error("expected 'coker', a free module R^n or a quotient R/(...)")
        self.end()
        self.session.declarations.append(Declaration("module", name.text, rd.name, M, name))

    def matrix(self, R) -> Matrix:
        s = self.s
        start = s.expect("[")
        p = PolyParser(s, R.ambient)
        rows = []
        while True:
            rtok = s.expect("[")
            row = []
            if not s.at("]"):
                row.append(R.reduce(p.expr()))
                while s.at(","):
                    s.next()
                    row.append(R.reduce(p.expr()))
            s.expect("]")
            if rows and len(row) != len(rows[0]):
                self.fail(f"row has {len(row)} entries, expected {len(rows[0])}", rtok)
            rows.append(row)
            if not s.at(","):
                break
            s.next()
        s.expect("]")
        if not rows:
            self.fail("empty matrix", start)
        return Matrix.from_rows(R, rows, len(rows[0]))


def parse_session(text: str, field=None, order: str | None = None) -> Session:
    """Parse a whole session; the first syntax error aborts with its location."""
    if isinstance(field, str):
        field = field_from_name(field)
    return _SessionParser(text, field, order).parse()


def _poly_list(polys) -> str:
    return ", ".join(format_poly(f) for f in polys)


def format_ring(R: QuotientRing) -> str:
    out = f"{R.field.name}[{','.join(R.vars)}]"
    if R.relations:
        out += f"/({_poly_list(R.relations)})"
    return out + f" order {R.ambient.order.spec}"


def format_session(session: Session) -> str:
    """Canonical text; parse_session(format_session(s)) prints back identically."""
    lines = []
    for d in session.declarations:
        if d.kind == "ring":
            lines.append(f"ring {d.name} = {format_ring(d.value)};")
        elif d.kind == "ideal":
            lines.append(f"ideal {d.name} = ({_poly_list(d.value.gens) or '0'});")
        else:
            M = d.value
            A = M.presentation
            if A.nrows == 0:
                lines.append(f"module {d.name} = {d.ring}^0;")
            elif A.ncols == 0:
                lines.append(f"module {d.name} = {d.ring}^{A.nrows};")
            else:
                rows = ", ".join(f"[{_poly_list(r)}]" for r in A.rows())
                lines.append(f"module {d.name} = coker [{rows}];")
    return "\n".join(lines) + "\n"
