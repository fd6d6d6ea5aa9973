"""Independent certificate checking.

Only ring, module and singular-locus primitives are used here; nothing from
the builder is trusted or consulted.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..module_kernel import (
    Matrix,
    ModuleMap,
    PresentedModule,
    SequenceEvidence,
    check_exact,
    check_sequence_evidence,
    is_canonical_map,
    short_exact,
)
from ..ring_kernel import Ideal, is_prime
from ..singularity import supported_in_sing
from .model import (
    Cosyzygy,
    Extension,
    Isomorphism,
    LeafSingPrime,
    Step,
    StructuralError,
    Summand,
    TierCertificate,
    Zero,
    tier_index,
)


@dataclass
class Report:
    accepted: bool
    failures: list = field(default_factory=list)  # sorted (path, reason)
    tier_index: int | None = None

    def paths(self) -> set:
        return {p for p, _ in self.failures}


class _Fail(Exception):
    pass


def _require(cond: bool, reason: str):
    if not cond:
        raise _Fail(reason)


def _map(source: PresentedModule, target: PresentedModule, A: Matrix, name: str) -> ModuleMap:
    _require(A is not None, f"{name} missing")
    _require(
        (A.nrows, A.ncols) == (target.ngens, source.ngens),
        f"{name} is {A.nrows}x{A.ncols}, expected {target.ngens}x{source.ngens}",
    )
    f = ModuleMap(source, target, A)
    bad = f.offending_column()
    _require(bad is None, f"{name} is not well defined (source relation {bad})")
    _require(is_canonical_map(f), f"{name} is not in normal form modulo the target relations")
    return f


def _copies(step, expected: list, names: list):
    _require(len(step.copies) == len(expected), "wrong number of module copies")
    for c, m, n in zip(step.copies, expected, names):
        _require(c == m, f"recorded {n} presentation differs from the {n} module")


def _identity_on(f: ModuleMap) -> bool:
    return f.is_identity()


def _check_sequence(f: ModuleMap, g: ModuleMap, lift, section):
    ok, why = check_exact(short_exact(f, g))
    _require(ok, f"sequence not exact: {why}")
    _require(lift is not None and section is not None, "exactness evidence missing")
    why = check_sequence_evidence(f, g, SequenceEvidence(lift, section))
    _require(why is None, f"exactness evidence rejected: {why}")


def _check_node(step: Step, ring):
    M = step.module
    _require(isinstance(M, PresentedModule), "module missing")
    _require(M.ring == ring, "module over a different ring")
    if isinstance(step, Zero):
        _require(M.is_zero(), "claimed zero module is nonzero")
    elif isinstance(step, LeafSingPrime):
        p = step.prime
        _require(isinstance(p, Ideal) and p.ring == ring, "prime missing or over another ring")
        _require(not p.is_unit(), "prime is the unit ideal")
        _require(M == PresentedModule.cyclic(ring, p.generators()), "module is not R/p for the stated prime")
        res = is_prime(p)
        if res.is_not_prime:
            raise _Fail(f"ideal is not prime (witness {res.witness})")
        if res.undecided:
            _require(step.primality == "assumed", "primality undecided and not flagged as assumed")
        _require(supported_in_sing(M), "R/p is not supported in the singular locus")
    elif isinstance(step, Extension):
        A, B = step.sub.module, step.quotient.module
        _copies(step, [A, M, B], ["sub", "middle", "quotient"])
        f = _map(A, M, step.f, "f")
        g = _map(M, B, step.g, "g")
        _check_sequence(f, g, step.lift, step.section)
    elif isinstance(step, Cosyzygy):
        S = step.kernel.module
        _require(isinstance(step.free_rank, int) and step.free_rank >= 0, "free rank must be a non-negative integer")
        _copies(step, [S, M], ["kernel", "cokernel"])
        F = PresentedModule.free(ring, step.free_rank)
        f = _map(S, F, step.f, "f")
        g = _map(F, M, step.g, "g")
        _check_sequence(f, g, step.lift, step.section)
    elif isinstance(step, Summand):
        Y = step.ambient.module
        _copies(step, [M, Y], ["summand", "ambient"])
        i = _map(M, Y, step.inclusion, "inclusion")
        r = _map(Y, M, step.retraction, "retraction")
        _require(r.compose(i).is_identity(), "retraction ∘ inclusion is not the identity")
        e = _map(Y, Y, step.projector, "projector")
        _require(i.compose(r).reduced().matrix == e.matrix, "projector differs from inclusion ∘ retraction")
    elif isinstance(step, Isomorphism):
        X = step.source.module
        _copies(step, [X, M], ["source", "target"])
        fw = _map(X, M, step.forward, "forward")
        inv = _map(M, X, step.inverse, "inverse")
        _require(inv.compose(fw).is_identity(), "inverse ∘ forward is not the identity")
        _require(fw.compose(inv).is_identity(), "forward ∘ inverse is not the identity")
    else:
        raise _Fail(f"unknown step kind {type(step).__name__}")


def verify(cert: TierCertificate) -> Report:
    failures = []
    ring = cert.ring

    def visit(step, path):
        if not isinstance(step, Step):
            failures.append((path, "not a step"))
            return
        try:
            _check_node(step, ring)
        except _Fail as e:
            failures.append((path, str(e)))
        except Exception as e:  # malformed data must not crash the verifier
            failures.append((path, f"check raised {type(e).__name__}: {e}"))
        for name, child in step.children():
            visit(child, f"{path}.{name}")

    visit(cert.step, "$")
    if isinstance(cert.step, Step) and cert.root_module != cert.step.module:
        failures.append(("$", "root module differs from the root step's module"))
    t = None
    try:
        t = tier_index(cert.step)
        if t != cert.claimed_tier:
            failures.append(("$", f"claimed tier {cert.claimed_tier} but structural tier is {t}"))
    except StructuralError as e:
        failures.append((e.path, e.reason))
    failures.sort()
    return Report(not failures, failures, t)
