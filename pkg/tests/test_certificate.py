import ast
import importlib
import json
import random
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tiercert.certificate import (
    CertificateParseError,
    Cosyzygy,
    Extension,
    Isomorphism,
    LeafSingPrime,
    Summand,
    TierCertificate,
    Zero,
    cert_to_obj,
    dumps,
    dumps_obj,
    extension_depth,
    leaves,
    loads,
    roundtrip,
    tier_index,
    verify,
    walk,
)
from tiercert.certificate.drill import mutate, regular_rational_prime, run_drill
from tiercert.module_kernel import PresentedModule, free_resolution

from tiercert.certificate.serialize import module_to_obj
from tiercert.ring_kernel.poly import format_poly


def test_single_leaf_is_tier_minus_one(cusp):
    assert tier_index(LeafSingPrime(PresentedModule.zero(cusp))) == -1


def test_cosyzygy_over_leaf_is_tier_zero(cusp):
    Z = PresentedModule.zero(cusp)
    assert tier_index(Cosyzygy(Z, kernel=LeafSingPrime(Z))) == 0
    assert tier_index(Cosyzygy(Z, kernel=Cosyzygy(Z, kernel=Zero(Z)))) == 1


def test_descent_certificate_has_tier_h(corpus_run):
    assert corpus_run.certificates["plane/k"].tier_index == 2
    assert corpus_run.certificates["line/k"].tier_index == 1


# synthetic trees for the structural laws


def _tree(draw_rng, Z, tier, size):
    """A random tree whose tier index is exactly ``tier``."""
    if size <= 1:
        if tier == -1:
            return Zero(Z)
        return Cosyzygy(Z, kernel=_tree(draw_rng, Z, tier - 1, 1)) if tier > 0 else Cosyzygy(Z, kernel=Zero(Z))
    choice = draw_rng.choice(["ext", "sum", "iso", "cos"] if tier >= 0 else ["ext", "sum", "iso"])
    if choice == "ext":
        k = draw_rng.randint(1, size - 1)
        lo = draw_rng.randint(-1, tier)
        parts = [_tree(draw_rng, Z, tier, k), _tree(draw_rng, Z, lo, size - k)]
        draw_rng.shuffle(parts)
        return Extension(Z, sub=parts[0], quotient=parts[1])
    if choice == "sum":
        return Summand(Z, ambient=_tree(draw_rng, Z, tier, size - 1))
    if choice == "iso":
        return Isomorphism(Z, source=_tree(draw_rng, Z, tier, size - 1))
    inner = max(tier - 1, -1)
    return Cosyzygy(Z, kernel=_tree(draw_rng, Z, inner, size - 1))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(-1, 3), st.integers(1, 8), st.integers(1, 8))
def test_extension_depth_is_additive(seed, tier, n1, n2):
    from conftest import ring

    rng = random.Random(seed)
    Z = PresentedModule.zero(ring("x"))
    a, b = _tree(rng, Z, tier, n1), _tree(rng, Z, tier, n2)
    assert tier_index(a) == tier_index(b) == tier
    glued = Extension(Z, sub=a, quotient=b)
    assert extension_depth(glued) == extension_depth(a) + extension_depth(b)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(-1, 3), st.integers(1, 10))
def test_tier_monotone_from_child_to_parent(seed, tier, size):
    from conftest import ring

    rng = random.Random(seed)
    t = _tree(rng, PresentedModule.zero(ring("x")), tier, size)
    for _, s in walk(t):
        for _, child in s.children():
            if isinstance(s, (Summand, Isomorphism)):
                assert tier_index(child) == tier_index(s)
            else:
                assert tier_index(child) <= tier_index(s)


def test_monotone_on_corpus(corpus_run):
    for c in corpus_run.certificates.values():
        for _, s in walk(c.step):
            for _, child in s.children():
                assert tier_index(child) <= tier_index(s)


# serialization


def test_roundtrip_is_byte_identical(corpus_run):
    for name, c in corpus_run.certificates.items():
        text = dumps(c)
        assert dumps(loads(text)) == text, name
        assert dumps(roundtrip(c)) == text


def test_canonical_form(corpus_run):
    text = corpus_run.texts["plane/k"]
    obj = json.loads(text)
    assert set(obj) == {"ring", "root_module", "step", "claimed_tier"}
    assert text == json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def test_unknown_kind_rejected(corpus_run):
    obj = json.loads(corpus_run.texts["cusp/point"])
    obj["step"]["kind"] = "filtration"
    with pytest.raises(CertificateParseError, match="filtration"):
        loads(json.dumps(obj))


def test_unknown_top_level_key_rejected(corpus_run):
    obj = json.loads(corpus_run.texts["cusp/k"])
    obj["extra"] = 1
    with pytest.raises(CertificateParseError):
        loads(json.dumps(obj))


def test_malformed_json_has_location():
    with pytest.raises(CertificateParseError) as e:
        loads('{"ring": {,}')
    assert e.value.line == 1 and e.value.column > 1


# verification


def test_corpus_certificates_accepted(corpus_run):
    for name, c in corpus_run.certificates.items():
        rep = verify(loads(corpus_run.texts[name]))
        assert rep.accepted, (name, rep.failures)
        assert rep.tier_index == c.claimed_tier


def _first_extension(obj):
    stack = [("$", obj["step"])]
    while stack:
        path, s = stack.pop(0)
        if s["kind"] == "extension":
            return path, s
        for k in ("sub", "quotient", "ambient", "kernel", "source"):
            if k in s:
                stack.append((f"{path}.{k}", s[k]))
    raise AssertionError("no extension step")


def test_tampered_extension_entry_rejected_at_node(corpus_run):
    obj = json.loads(corpus_run.texts["cusp/point"])
    path, step = _first_extension(obj)
    step["f"]["matrix"][0][0] = step["f"]["matrix"][0][0] + "+1"
    rep = verify(loads(json.dumps(obj)))
    assert not rep.accepted
    assert path in rep.paths()


def test_leaf_relabelled_with_regular_prime_rejected(corpus_run):
    c = corpus_run.certificates["cusp/k"]
    obj = cert_to_obj(c)
    mutated, mut = mutate(obj, random.Random(0), c.ring, kind="leaf_prime")
    assert mut.kind == "leaf_prime"
    assert not verify(loads(dumps_obj(mutated))).accepted
    # relabel consistently so only the support check can object
    p = regular_rational_prime(c.ring)
    assert obj["step"]["kind"] == "leaf_sing_prime"
    Rp = module_to_obj(PresentedModule.cyclic(c.ring, p.generators()))
    obj["step"]["prime"] = [format_poly(g) for g in p.generators()]
    obj["step"]["module"] = Rp
    obj["root_module"] = Rp
    rep = verify(loads(dumps_obj(obj)))
    assert not rep.accepted
    assert rep.failures == [("$", "R/p is not supported in the singular locus")]


def test_claimed_tier_mismatch(corpus_run):
    obj = json.loads(corpus_run.texts["a1/mcm"])
    obj["claimed_tier"] = 2
    rep = verify(loads(json.dumps(obj)))
    assert not rep.accepted and rep.paths() == {"$"}


@pytest.mark.parametrize("name", ["cusp/point", "a1/mcm", "plane/k", "node/point", "dual/k"])
def test_drill_catches_every_mutation(corpus_run, name):
    for seed in range(3):
        outcomes = run_drill(corpus_run.certificates[name], seed=seed, count=10)
        assert all(o.caught for o in outcomes), [(o.mutation, o.failure_paths) for o in outcomes if not o.caught]


def test_verifier_imports_only_primitives():
    mod = importlib.import_module("tiercert.certificate.verify")
    tree = ast.parse(Path(mod.__file__).read_text())
    allowed = {"ring_kernel", "module_kernel", "singularity", "model", "errors"}
    for node in ast.walk(tree):
        if isinstance(node, ast.ImportFrom) and node.level:
            top = (node.module or "").split(".")[0]
            assert top in allowed, node.module


def test_pd_bounded_by_tier_on_regular_rings(corpus_run):
    for name, c in corpus_run.certificates.items():
        if name.split("/")[0] in ("plane", "line"):
            res = free_resolution(c.root_module)
            assert res.terminated and res.length <= c.claimed_tier


def test_leaves_on_isolated_rings_are_residue_fields(corpus_run):
    for name, c in corpus_run.certificates.items():
        R = c.ring
        if name.split("/")[0] in ("cusp", "a1", "node"):
            for leaf in leaves(c.step):
                assert leaf.prime == R.maximal_ideal()


def test_certificate_object_shape(corpus_run):
    c = corpus_run.certificates["cusp/point"]
    assert isinstance(c, TierCertificate) and c.root_module.ngens == 1
