"""Curated rings and modules, and the acceptance suite run over them."""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from pathlib import Path

from . import oracles
from .certificate import dumps, leaves, loads, verify
from .certificate.drill import run_drill
from .koszul import depth
from .module_kernel import PresentedModule, direct_sum, free_resolution, is_free
from .ring_kernel import Ideal, Poly, PolyRing, QuotientRing, height, ideal_intersect, ideal_quotient, radical_membership
from .singularity import codim_sing, is_isolated_singularity, sing_ideal
from .tier_builder import Builder, BuilderConfig, decompose_tier, pd_at_prime

DOMAINS = ("plane", "line", "cusp", "a1")


def corpus_rings() -> dict:
    """Fresh ring objects; nothing is shared between calls."""
    return {
        "plane": QuotientRing(PolyRing(["x", "y"])),
        "line": QuotientRing(PolyRing(["x"])),
        "cusp": QuotientRing(PolyRing(["x", "y"]), ["y^2 - x^3"]),
        "a1": QuotientRing(PolyRing(["x", "y", "z"]), ["x^2 + y^2 + z^2"]),
        "dual": QuotientRing(PolyRing(["x"]), ["x^2"]),
        "node": QuotientRing(PolyRing(["x", "y"]), ["x*y"]),
    }


def _cyc(R, *gens):
    return PresentedModule.cyclic(R, [R(R.ambient.parse(g)) for g in gens])


def a1_mcm(R) -> PresentedModule:
    x, y, z = R.gens()
    return PresentedModule.from_rows(R, [[z, x + 2 * y], [x - 2 * y, -z]])


def corpus_modules(rings: dict) -> list:
    """(entry name, ring name, module) in a fixed order."""
    P, L, C, A, D, N = (rings[k] for k in ("plane", "line", "cusp", "a1", "dual", "node"))
    kA = _cyc(A, "x", "y", "z")
    return [
        ("plane/k", "plane", _cyc(P, "x", "y")),
        ("plane/R_x", "plane", _cyc(P, "x")),
        ("plane/point", "plane", _cyc(P, "x-1", "y-1")),
        ("plane/R", "plane", PresentedModule.free(P, 1)),
        ("line/k", "line", _cyc(L, "x")),
        ("line/point", "line", _cyc(L, "x-2")),
        ("cusp/point", "cusp", _cyc(C, "x-1", "y-1")),
        ("cusp/k", "cusp", _cyc(C, "x", "y")),
        ("cusp/R_x", "cusp", _cyc(C, "x")),
        ("cusp/R", "cusp", PresentedModule.free(C, 1)),
        ("a1/mcm", "a1", a1_mcm(A)),
        ("a1/point", "a1", _cyc(A, "x-1", "y-2", "z")),
        ("a1/k", "a1", kA),
        ("a1/R2", "a1", PresentedModule.free(A, 2)),
        ("a1/k+R", "a1", direct_sum(kA, PresentedModule.free(A, 1))),
        ("a1/R_m2", "a1", _cyc(A, "x^2", "x*y", "x*z", "y^2", "y*z", "z^2")),
        ("dual/R", "dual", PresentedModule.free(D, 1)),
        ("dual/k", "dual", _cyc(D, "x")),
        ("node/point", "node", _cyc(N, "x-1", "y")),
        ("node/k", "node", _cyc(N, "x", "y")),
        ("node/R_x", "node", _cyc(N, "x")),
    ]


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str = ""


@dataclass
class CorpusRun:
    rings: dict
    builders: dict
    certificates: dict  # entry name -> TierCertificate
    texts: dict  # entry name -> canonical JSON
    results: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)


def build_certificates(config: BuilderConfig) -> CorpusRun:
    rings = corpus_rings()
    builders = {k: Builder(R, config) for k, R in rings.items()}
    certs, texts = {}, {}
    for name, rk, M in corpus_modules(rings):
        c = builders[rk].certify(M)
        certs[name] = c
        texts[name] = dumps(c)
    return CorpusRun(rings, builders, certs, texts)


def certificate_table(run: CorpusRun) -> str:
    lines = []
    for name, text in run.texts.items():
        digest = hashlib.sha256(text.encode()).hexdigest()[:16]
        lines.append(f"{name:<12} tier {run.certificates[name].claimed_tier:>2}  sha256:{digest}")
    return "\n".join(lines)


# ------------------------------------------------------------------ criteria


def check_cusp_locus(run: CorpusRun) -> CriterionResult:
    C = run.rings["cusp"]
    J = sing_ideal(C)
    x, y = C.gens()
    rad = radical_membership(x, J) and radical_membership(y, J)
    proper = not J.is_unit()
    c = codim_sing(C)
    iso = is_isolated_singularity(C)
    ok = rad and proper and c == 1 and iso
    return CriterionResult(1, "cusp singular locus", ok, f"x,y in rad Sing: {rad}, c = {c}, isolated = {iso}")


def check_cusp_point(run: CorpusRun) -> CriterionResult:
    c = run.certificates["cusp/point"]
    rep = verify(loads(run.texts["cusp/point"]))
    ok = rep.accepted and rep.tier_index <= 1 == codim_sing(run.rings["cusp"])
    return CriterionResult(2, "cusp R/p certified", ok, f"accepted = {rep.accepted}, tier {c.claimed_tier}")


def check_regular_plane(run: CorpusRun) -> CriterionResult:
    out = []
    ok = True
    for name, want in (("plane/k", 2), ("plane/R_x", 1)):
        c = run.certificates[name]
        rep = verify(c)
        res = free_resolution(c.root_module)
        pd = res.pd
        good = rep.accepted and c.claimed_tier == want and pd == want
        ok &= good
        out.append(f"{name}: tier {c.claimed_tier}, pd {res.pd_report()}")
    return CriterionResult(3, "regular ring tiers equal pd", ok, "; ".join(out))


def check_sharpness(run: CorpusRun) -> CriterionResult:
    out = []
    ok = True
    points = {"plane": "plane/point", "line": "line/point", "cusp": "cusp/point", "a1": "a1/point"}
    for rk in DOMAINS:
        R = run.rings[rk]
        c = codim_sing(R)
        if c < 0:
            continue
        cert = run.certificates[points[rk]]
        M = cert.root_module
        p = Ideal(R, M.presentation.row(0))
        h = height(p)
        lp = pd_at_prime(M, p)
        rep = verify(cert)
        good = h == c and lp.status == "exact" and lp.value == c and rep.accepted and cert.claimed_tier == c
        ok &= good
        out.append(f"{rk}: c={c} ht={h} pd_p={lp} tier={cert.claimed_tier}")
    return CriterionResult(4, "strict inclusions at height c", ok, "; ".join(out))


def check_koszul_support(run: CorpusRun) -> CriterionResult:
    checks = [s for b in run.builders.values() for s in b.trace.koszul_support]
    bad = [s for s in checks if s.degree > 0 and not s.supported]
    positive = sum(1 for s in checks if s.degree > 0)
    return CriterionResult(5, "Koszul homology supported in Sing", not bad, f"{positive} positive-degree modules, {len(bad)} unsupported")


def check_a1_mcm(run: CorpusRun) -> CriterionResult:
    c = run.certificates["a1/mcm"]
    M = c.root_module
    R = run.rings["a1"]
    d = depth(M, R.gens())
    fr = is_free(M)
    rep = verify(c)
    ok = d == 2 and fr.status == "not_free" and rep.accepted and c.claimed_tier == 1 == R.dim - 1
    return CriterionResult(6, "A1 surface MCM module", ok, f"depth {d}, {fr.status}, tier {c.claimed_tier}")


def check_decomposition(run: CorpusRun) -> CriterionResult:
    R = run.rings["a1"]
    m = R.maximal_ideal()
    out = []
    ok = True
    count = 0
    for name, c in run.certificates.items():
        if not name.startswith("a1/") or c.claimed_tier > 0:
            continue
        if any(getattr(s, "prime", m) != m for s in leaves(c.step)):
            continue
        dec = decompose_tier(c, 0)
        count += 1
        good = dec.ok and all(dec.checks[k] for k in ("finite_length", "pd_bound", "exact"))
        if depth(c.root_module, R.gens()) > 0:
            good &= dec.checks.get("alpha_zero") is True
        ok &= good
        out.append(f"{name}:{'ok' if good else 'FAIL'}")
    ok &= count > 0
    return CriterionResult(7, "tier-0 decomposition over A1", ok, f"{count} derivations: " + " ".join(out))


def _to_poly(S: PolyRing, f: dict) -> Poly:
    return Poly(S, {m: c for m, c in f.items() if c})


def _to_dict(f: Poly) -> dict:
    return dict(f.terms)


def oracle_instance(rng: random.Random, p: int = 5, max_degree: int = 4) -> dict:
    """Compare membership, colon and intersection with the linear-algebra oracle.

    Returns a dict op -> (agree, checked pieces).
    """
    n = rng.choice([1, 2])
    S = PolyRing(["x", "y"][:n])
    Rq = QuotientRing(S)
    orc = oracles.GradedOracle(n, p)

    def gens_list(k):
        out = []
        while len(out) < k:
            g = oracles.random_homogeneous(rng, n, rng.randint(1, 3), p)
            if g:
                out.append(g)
        return out

    G = gens_list(rng.randint(1, 3))
    H = gens_list(rng.randint(1, 2))
    I = Ideal(Rq, [_to_poly(S, g) for g in G])
    J = Ideal(Rq, [_to_poly(S, h) for h in H])

    # membership: one random element and one built inside I
    d = rng.randint(0, max_degree)
    f1 = oracles.random_homogeneous(rng, n, d, p)
    f2 = {}
    for g in G:
        dg = oracles.degree(g)
        if dg <= max_degree:
            f2 = oracles.padd(f2, oracles.pmul(oracles.random_homogeneous(rng, n, max_degree - dg, p), g, p), p)
    member_ok = all(I.contains(_to_poly(S, f)) == orc.member(f, G) for f in (f1, f2))

    a = oracles.random_homogeneous(rng, n, rng.randint(0, 2), p) or {(0,) * n: 1}
    Q = ideal_quotient(I, _to_poly(S, a))
    Qg = [_to_dict(g) for g in Q.generators()]
    X = ideal_intersect(I, J)
    Xg = [_to_dict(g) for g in X.generators()]
    colon_ok = inter_ok = True
    for e in range(max_degree + 1):
        colon_ok &= orc.piece(Qg, e) == orc.colon_piece(G, a, e)
        inter_ok &= orc.piece(Xg, e) == orc.intersection_piece(G, H, e)
    return {"membership": member_ok, "quotient": colon_ok, "intersection": inter_ok}


def check_oracle(run: CorpusRun, instances: int = 100, seed: int = 0) -> CriterionResult:
    rng = random.Random(f"oracle:{seed}")
    tallies = {"membership": 0, "quotient": 0, "intersection": 0}
    for _ in range(instances):
        for k, v in oracle_instance(rng).items():
            tallies[k] += bool(v)
    ok = all(v == instances for v in tallies.values())
    detail = ", ".join(f"{k} {v}/{instances}" for k, v in tallies.items())
    return CriterionResult(8, "oracle agreement over F5", ok, detail)


def check_drill(run: CorpusRun, seed: int = 0, per_cert: int = 10) -> CriterionResult:
    total = caught = 0
    missed = []
    for name, c in run.certificates.items():
        for o in run_drill(c, seed=seed, count=per_cert):
            total += 1
            if o.caught:
                caught += 1
            else:
                missed.append(f"{name}@{o.mutation.path}")
    detail = f"{caught}/{total} mutations rejected at the right path"
    if missed:
        detail += "; missed " + ", ".join(missed[:5])
    return CriterionResult(9, "verifier mutation drill", caught == total, detail)


def check_determinism(run: CorpusRun, config: BuilderConfig) -> CriterionResult:
    again = build_certificates(config)
    same = again.texts == run.texts and certificate_table(again) == certificate_table(run)
    return CriterionResult(10, "deterministic certificates", same, f"{len(run.texts)} certificates rebuilt from fresh rings")


def run_corpus(config: BuilderConfig | None = None, out_dir: str | Path | None = None, oracle_instances: int = 100) -> CorpusRun:
    config = config or BuilderConfig()
    run = build_certificates(config)
    seed = config.random_seed
    run.results = [
        check_cusp_locus(run),
        check_cusp_point(run),
        check_regular_plane(run),
        check_sharpness(run),
        check_koszul_support(run),
        check_a1_mcm(run),
        check_decomposition(run),
        check_oracle(run, oracle_instances, seed),
        check_drill(run, seed),
        check_determinism(run, config),
    ]
    if out_dir is not None:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for name, text in run.texts.items():
            (out / (name.replace("/", "__") + ".json")).write_text(text, encoding="utf-8")
    return run


def format_results(run: CorpusRun) -> str:
    lines = [certificate_table(run), ""]
    for r in run.results:
        lines.append(f"[{'PASS' if r.passed else 'FAIL'}] {r.number:>2}. {r.title}: {r.detail}")
    return "\n".join(lines)
