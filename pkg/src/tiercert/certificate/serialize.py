"""Canonical JSON encoding of certificates.

Keys are sorted, there is no insignificant whitespace, and polynomials are
printed in the ring's term order, so equal certificates encode to equal bytes.
"""

from __future__ import annotations

import json

from ..errors import GrammarError
from ..module_kernel import Matrix, PresentedModule
from ..ring_kernel import Ideal, PolyRing, QuotientRing, field_from_name
from ..ring_kernel.poly import format_poly
from .model import (
    Cosyzygy,
    Extension,
    Isomorphism,
    KINDS,
    LeafSingPrime,
    Step,
    Summand,
    TierCertificate,
    Zero,
)


class CertificateParseError(GrammarError):
    pass


# ---------------------------------------------------------------- encoding


def ring_to_obj(R: QuotientRing) -> dict:
    return {
        "field": R.field.name,
        "variables": list(R.vars),
        "order": R.ambient.order.spec,
        "relations": [format_poly(g) for g in R.relations_gb()],
        "equidimensional": R._equidim_flag,
    }


def matrix_to_obj(A: Matrix) -> dict:
    return {"rows": A.nrows, "cols": A.ncols, "matrix": [[format_poly(e) for e in r] for r in A.rows()]}


def module_to_obj(M: PresentedModule) -> dict:
    return {"presentation": matrix_to_obj(M.presentation)}


def step_to_obj(s: Step) -> dict:
    out = {"kind": s.kind, "module": module_to_obj(s.module)}
    if isinstance(s, LeafSingPrime):
        out["prime"] = [format_poly(g) for g in s.prime.generators()]
        out["primality"] = s.primality
    elif isinstance(s, Extension):
        out.update(
            sub=step_to_obj(s.sub),
            quotient=step_to_obj(s.quotient),
            f=matrix_to_obj(s.f),
            g=matrix_to_obj(s.g),
            lift=matrix_to_obj(s.lift),
            section=matrix_to_obj(s.section),
            copies=[module_to_obj(m) for m in s.copies],
        )
    elif isinstance(s, Cosyzygy):
        out.update(
            kernel=step_to_obj(s.kernel),
            free_rank=s.free_rank,
            f=matrix_to_obj(s.f),
            g=matrix_to_obj(s.g),
            lift=matrix_to_obj(s.lift),
            section=matrix_to_obj(s.section),
            copies=[module_to_obj(m) for m in s.copies],
        )
    elif isinstance(s, Summand):
        out.update(
            ambient=step_to_obj(s.ambient),
            inclusion=matrix_to_obj(s.inclusion),
            retraction=matrix_to_obj(s.retraction),
            projector=matrix_to_obj(s.projector),
            copies=[module_to_obj(m) for m in s.copies],
        )
    elif isinstance(s, Isomorphism):
        out.update(
            source=step_to_obj(s.source),
            forward=matrix_to_obj(s.forward),
            inverse=matrix_to_obj(s.inverse),
            copies=[module_to_obj(m) for m in s.copies],
        )
    return out


def cert_to_obj(c: TierCertificate) -> dict:
    return {
        "ring": ring_to_obj(c.ring),
        "root_module": module_to_obj(c.root_module),
        "step": step_to_obj(c.step),
        "claimed_tier": c.claimed_tier,
    }


def dumps_obj(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def dumps(c: TierCertificate) -> str:
    return dumps_obj(cert_to_obj(c))


# ---------------------------------------------------------------- decoding


class _Decoder:
    def __init__(self, text: str | None):
        self.text = text or ""

    def locate(self, needle: str):
        """Line/column of the first occurrence of ``needle`` in the source text."""
        pos = self.text.find(needle) if needle else -1
        if pos < 0:
            return 1, 1
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def fail(self, message: str, near: str = ""):
        line, col = self.locate(near)
        raise CertificateParseError(message, line, col)

    def need(self, obj, key, typ, where):
        if not isinstance(obj, dict):
            self.fail(f"{where}: expected an object")
        if key not in obj:
            self.fail(f"{where}: missing key {key!r}")
        v = obj[key]
        if typ is int:
            ok = isinstance(v, int) and not isinstance(v, bool)
        else:
            ok = isinstance(v, typ)
        if not ok:
            self.fail(f"{where}: key {key!r} has the wrong type", json.dumps(key))
        return v

    def ring(self, obj) -> QuotientRing:
        field = field_from_name(self.need(obj, "field", str, "ring"))
        variables = self.need(obj, "variables", list, "ring")
        order = self.need(obj, "order", str, "ring")
        rels = self.need(obj, "relations", list, "ring")
        eq = obj.get("equidimensional")
        S = PolyRing(variables, field, order)
        return QuotientRing(S, [self.poly_in(S, r) for r in rels], equidimensional=eq)

    def poly_in(self, S, text):
        if not isinstance(text, str):
            self.fail("polynomial entries must be strings", json.dumps(text))
        try:
            return S.parse(text)
        except GrammarError as e:
            line, col = self.locate(json.dumps(text))
            raise CertificateParseError(f"bad polynomial {text!r}: {e.message}", line, col) from None

    def matrix(self, R, obj, where) -> Matrix:
        r = self.need(obj, "rows", int, where)
        c = self.need(obj, "cols", int, where)
        rows = self.need(obj, "matrix", list, where)
        if len(rows) != r or any(not isinstance(x, list) or len(x) != c for x in rows):
            self.fail(f"{where}: matrix does not match its stated shape {r}x{c}")
        cols = [[R(self.poly_in(R.ambient, rows[i][j])) for i in range(r)] for j in range(c)]
        return Matrix(R, r, c, cols)

    def module(self, R, obj, where) -> PresentedModule:
        return PresentedModule(R, self.matrix(R, self.need(obj, "presentation", dict, where), where))

    def step(self, R, obj, path) -> Step:
        kind = self.need(obj, "kind", str, path)
        if kind not in KINDS:
            self.fail(f"{path}: unknown step kind {kind!r}", f'"kind":{json.dumps(kind)}')
        M = self.module(R, self.need(obj, "module", dict, path), path + ".module")

        def mat(key):
            return self.matrix(R, self.need(obj, key, dict, path), f"{path}.{key}")

        def copies():
            return [self.module(R, m, f"{path}.copies") for m in self.need(obj, "copies", list, path)]

        if kind == "zero":
            return Zero(M)
        if kind == "leaf_sing_prime":
            gens = self.need(obj, "prime", list, path)
            prime = Ideal(R, [R(self.poly_in(R.ambient, g)) for g in gens])
            return LeafSingPrime(M, prime, self.need(obj, "primality", str, path))
        if kind == "extension":
            return Extension(
                M,
                self.step(R, self.need(obj, "sub", dict, path), path + ".sub"),
                self.step(R, self.need(obj, "quotient", dict, path), path + ".quotient"),
                mat("f"), mat("g"), mat("lift"), mat("section"), copies(),
            )
        if kind == "cosyzygy":
            return Cosyzygy(
                M,
                self.step(R, self.need(obj, "kernel", dict, path), path + ".kernel"),
                self.need(obj, "free_rank", int, path),
                mat("f"), mat("g"), mat("lift"), mat("section"), copies(),
            )
        if kind == "summand":
            return Summand(
                M,
                self.step(R, self.need(obj, "ambient", dict, path), path + ".ambient"),
                mat("inclusion"), mat("retraction"), mat("projector"), copies(),
            )
        return Isomorphism(
            M,
            self.step(R, self.need(obj, "source", dict, path), path + ".source"),
            mat("forward"), mat("inverse"), copies(),
        )

    def cert(self, obj) -> TierCertificate:
        if not isinstance(obj, dict):
            self.fail("certificate must be a JSON object")
        extra = set(obj) - {"ring", "root_module", "step", "claimed_tier"}
        if extra:
            k = sorted(extra)[0]
            self.fail(f"unknown top-level key {k!r}", json.dumps(k))
        try:
            R = self.ring(self.need(obj, "ring", dict, "certificate"))
        except (ValueError, TypeError) as e:
            if isinstance(e, CertificateParseError):
                raise
            self.fail(f"bad ring: {e}", '"ring"')
        root = self.module(R, self.need(obj, "root_module", dict, "certificate"), "root_module")
        step = self.step(R, self.need(obj, "step", dict, "certificate"), "$")
        tier = self.need(obj, "claimed_tier", int, "certificate")
        return TierCertificate(R, root, step, tier)


def obj_to_cert(obj, text: str | None = None) -> TierCertificate:
    return _Decoder(text).cert(obj)


def loads(text: str) -> TierCertificate:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise CertificateParseError(e.msg, e.lineno, e.colno) from None
    return obj_to_cert(obj, text)


def roundtrip(c: TierCertificate) -> TierCertificate:
    return loads(dumps(c))
