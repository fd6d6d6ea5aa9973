"""Seeded single-field mutations of serialized certificates.

Each mutation changes one matrix entry, one leaf prime, or the claimed tier.
A mutation counts as caught when the verifier rejects the result and every
failure path is the mutated step or its parent.
"""

from __future__ import annotations

import copy
import itertools
import json
import random
from dataclasses import dataclass

from ..errors import TiercertError
from ..ring_kernel import Ideal, PolyRing
from ..ring_kernel.poly import format_poly
from .serialize import CertificateParseError, cert_to_obj, dumps_obj, loads
from .verify import verify

CHILD_KEYS = ("sub", "quotient", "ambient", "kernel", "source")
MATRIX_KEYS = ("f", "g", "lift", "section", "inclusion", "retraction", "projector", "forward", "inverse")


@dataclass
class Mutation:
    kind: str
    path: str  # step path of the mutated field
    field: str
    detail: str


@dataclass
class DrillOutcome:
    mutation: Mutation
    rejected: bool
    failure_paths: list
    path_ok: bool

    @property
    def caught(self) -> bool:
        return self.rejected and self.path_ok


def _parent(path: str) -> str:
    return path.rsplit(".", 1)[0] if "." in path else path


def _matrix_sites(obj: dict):
    """(step path, field name, matrix object) for every matrix with an entry."""
    sites = []
    if obj["root_module"]["presentation"]["matrix"] and obj["root_module"]["presentation"]["cols"]:
        sites.append(("$", "root_module", obj["root_module"]["presentation"]))

    def visit(step, path):
        def add(name, m):
            if m["rows"] and m["cols"]:
                sites.append((path, name, m))

        add("module", step["module"]["presentation"])
        for k in MATRIX_KEYS:
            if k in step:
                add(k, step[k])
        for i, c in enumerate(step.get("copies", [])):
            add(f"copies[{i}]", c["presentation"])
        for k in CHILD_KEYS:
            if k in step:
                visit(step[k], f"{path}.{k}")

    visit(obj["step"], "$")
    return sites


def _leaf_sites(obj: dict):
    out = []

    def visit(step, path):
        if step["kind"] == "leaf_sing_prime":
            out.append((path, step))
        for k in CHILD_KEYS:
            if k in step:
                visit(step[k], f"{path}.{k}")

    visit(obj["step"], "$")
    return out


def regular_rational_prime(R):
    """A maximal ideal at an F_p-point of Spec R outside the singular locus, or None."""
    from ..singularity import sing_ideal

    p = R.field.characteristic
    if not p:
        return None
    sing = sing_ideal(R)
    rels = R.relations_gb()
    for pt in itertools.product(range(p), repeat=R.nvars):
        if any(g.evaluate(pt) for g in rels):
            continue
        if all(not g.evaluate(pt) for g in sing.groebner()):
            continue
        return Ideal(R, [R.var(v) - c for v, c in zip(R.vars, pt)])
    return None


def mutate(obj: dict, rng: random.Random, ring, kind: str | None = None):
    """Return (mutated object, Mutation); the input is not modified."""
    obj = copy.deepcopy(obj)
    kinds = ["matrix"] * 6 + ["leaf_prime"] * 2 + ["claimed_tier"] * 2
    kind = kind or rng.choice(kinds)
    leaves = _leaf_sites(obj)
    regular = regular_rational_prime(ring) if kind == "leaf_prime" else None
    if kind == "leaf_prime" and (not leaves or regular is None):
        kind = "matrix"
    if kind == "claimed_tier":
        delta = rng.choice([-1, 1])
        obj["claimed_tier"] += delta
        return obj, Mutation(kind, "$", "claimed_tier", f"{delta:+d}")
    if kind == "leaf_prime":
        path, step = rng.choice(leaves)
        step["prime"] = [format_poly(g) for g in regular.generators()]
        return obj, Mutation(kind, path, "prime", str(step["prime"]))
    sites = _matrix_sites(obj)
    path, name, m = rng.choice(sites)
    i = rng.randrange(m["rows"])
    j = rng.randrange(m["cols"])
    S = ring.ambient
    old = S.parse(m["matrix"][i][j])
    new = ring(old + 1)
    m["matrix"][i][j] = format_poly(new)
    return obj, Mutation("matrix", path, name, f"[{i}][{j}] {format_poly(old)} -> {format_poly(new)}")


def run_drill(cert, seed: int = 0, count: int = 10) -> list[DrillOutcome]:
    obj = cert_to_obj(cert)
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        mobj, mut = mutate(obj, rng, cert.ring)
        text = dumps_obj(mobj)
        try:
            rep = verify(loads(text))
            rejected, paths = not rep.accepted, sorted({p for p, _ in rep.failures})
        except (CertificateParseError, TiercertError) as e:
            rejected, paths = True, ["$"]
        allowed = {mut.path, _parent(mut.path)}
        path_ok = bool(paths) and set(paths) <= allowed
        out.append(DrillOutcome(mut, rejected, paths, path_ok))
    return out
