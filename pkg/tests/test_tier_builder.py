import pytest

from conftest import ring
from tiercert.certificate import Isomorphism, LeafSingPrime, dumps, leaves, verify
from tiercert.certificate.drill import regular_rational_prime
from tiercert.errors import SearchExhausted, UsageError
from tiercert.module_kernel import ModuleMap, PresentedModule, direct_sum, is_exact, short_exact
from tiercert.ring_kernel import Ideal, height, ideal_quotient
from tiercert.singularity import codim_sing
from tiercert.tier_builder import Builder, BuilderConfig, certify, decompose_tier, pd_at_prime


def P(R, text):
    return R(R.ambient.parse(text))


def ideal(R, *gens):
    return Ideal(R, [P(R, g) for g in gens])


def cyc(R, *gens):
    return PresentedModule.cyclic(R, [P(R, g) for g in gens])


# ------------------------------------------------------------ searches


def test_regular_system_of_principal_prime(plane):
    xs, f = Builder(plane).choose_regular_system(ideal(plane, "x"), 1)
    assert xs == [P(plane, "x")] and f == plane.one()


def test_regular_system_on_cusp(cusp):
    p = ideal(cusp, "x - 1", "y - 1")
    xs, f = Builder(cusp).choose_regular_system(p, 1)
    assert len(xs) == 1 and p.contains(xs[0])
    I = Ideal(cusp, xs)
    assert cusp.dim - I.dim() == 1
    assert not p.contains(f) and ideal_quotient(I, p).contains(f)


def test_regular_system_maximal_plane(plane):
    xs, _ = Builder(plane).choose_regular_system(ideal(plane, "x", "y"), 2)
    assert len(xs) == 2 and height(Ideal(plane, xs)) == 2


def test_regular_system_search_exhausted(cusp):
    cfg = BuilderConfig(max_random_attempts=0)
    with pytest.raises(SearchExhausted):
        # (x,y) is singular and has no regular system of one element
        Builder(cusp, cfg).choose_regular_system(ideal(cusp, "x", "y"), 1)


def test_colon_witness_trivial(plane):
    p = ideal(plane, "x")
    assert Builder(plane).colon_witness(p, p) == plane.one()


def test_colon_witness_needs_unramified_prime(line):
    # (x^2 : x) = (x), but x lies in p and (x^2) is not (x) locally at (x):
    # no admissible a exists and the Mayer-Vietoris square would not be exact
    I, p = ideal(line, "x^2"), ideal(line, "x")
    assert ideal_quotient(I, P(line, "x")) == p
    with pytest.raises(SearchExhausted):
        Builder(line, BuilderConfig(max_random_attempts=8)).colon_witness(I, p)
    A, Q = cyc(line, "x^2"), cyc(line, "x")
    mid = direct_sum(Q, Q)
    f = ModuleMap.from_rows(A, mid, [[line.one()], [line.one()]])
    g = ModuleMap.from_rows(mid, Q, [[line.one(), -line.one()]])
    assert not is_exact(short_exact(f, g))


def test_mayer_vietoris_degenerate(cusp):
    # a = 1: I + (a) = R and the sequence is R/I -> R/p
    p = ideal(cusp, "x", "y")
    assert Builder(cusp).colon_witness(p, p) == cusp.one()


def test_colon_witness_cusp(cusp):
    b = Builder(cusp)
    p = ideal(cusp, "x - 1", "y - 1")
    xs, f = b.choose_regular_system(p, 1)
    I = Ideal(cusp, xs)
    if not I.contains_ideal(p):
        a = b.colon_witness(I, p, f)
        assert not p.contains(a) and ideal_quotient(I, a) == p


# ------------------------------------------------------------ filtration


def test_filtration_of_prime_quotient(plane):
    filt = Builder(plane).prime_filtration(cyc(plane, "x"))
    assert len(filt) == 1 and filt[0].prime == ideal(plane, "x")


def test_filtration_of_dual_numbers(line):
    filt = Builder(line).prime_filtration(cyc(line, "x^2"))
    assert [fs.prime for fs in filt] == [ideal(line, "x"), ideal(line, "x")]


def test_filtration_ranks_decrease(cusp, a1, plane):
    for R, gens in ((cusp, ("x - 1", "y - 1")), (a1, ("x - 1", "y - 2", "z")), (plane, ("x", "y"))):
        b = Builder(R)
        b.certify(cyc(R, *gens))
        assert all(child < parent for parent, child in b.trace.rank_checks)


# ------------------------------------------------------------ certify


def test_singular_prime_is_a_leaf(cusp):
    c = certify(cyc(cusp, "x", "y"))
    assert isinstance(c.step, LeafSingPrime) and c.claimed_tier == -1


def test_cusp_point(cusp):
    c = certify(cyc(cusp, "x - 1", "y - 1"))
    assert c.claimed_tier <= 1 and verify(c).accepted


def test_regular_line_has_no_leaves(line):
    c = certify(cyc(line, "x"))
    assert c.claimed_tier == 1 and not leaves(c.step)
    assert verify(c).accepted


def test_regular_plane_residue_field(plane):
    c = certify(cyc(plane, "x", "y"))
    assert c.claimed_tier == 2 and verify(c).accepted


def test_prime_equal_to_system_uses_isomorphism(a1):
    c = certify(cyc(a1, "x - 1", "y - 2", "z"))
    assert verify(c).accepted and c.claimed_tier == 2


def test_tier_bounded_by_codim_sing(corpus_run):
    for c in corpus_run.certificates.values():
        assert c.claimed_tier <= max(codim_sing(c.ring), -1)


def test_koszul_homology_supported(corpus_run):
    checks = [s for b in corpus_run.builders.values() for s in b.trace.koszul_support]
    assert checks and all(s.supported for s in checks if s.degree > 0)


def test_seed_determinism(a1):
    M = PresentedModule.from_rows(a1, [[P(a1, "z"), P(a1, "x + 2*y")], [P(a1, "x - 2*y"), P(a1, "-z")]])
    for seed in (0, 7):
        cfg = BuilderConfig(random_seed=seed)
        fresh = ring("xyz", "x^2 + y^2 + z^2")
        M2 = PresentedModule.from_rows(fresh, [[P(fresh, "z"), P(fresh, "x + 2*y")], [P(fresh, "x - 2*y"), P(fresh, "-z")]])
        assert dumps(certify(M, cfg)) == dumps(certify(M2, cfg))


def test_config_rng_is_order_independent():
    cfg = BuilderConfig(random_seed=3)
    first = cfg.rng("task a").random()
    cfg.rng("task b").random()
    assert cfg.rng("task a").random() == first


def test_config_rejects_bad_policy():
    with pytest.raises(ValueError):
        BuilderConfig(primality_policy="maybe")


def test_self_check(cusp):
    c = certify(cyc(cusp, "x - 1", "y - 1"), BuilderConfig(self_check=True))
    assert c.claimed_tier == 1


def test_wrong_ring_module(cusp, plane):
    with pytest.raises(UsageError):
        Builder(cusp).certify(cyc(plane, "x"))


# ------------------------------------------------------------ local pd


def test_local_pd_free(cusp):
    assert pd_at_prime(PresentedModule.free(cusp, 2), ideal(cusp, "x - 1", "y - 1")).value == 0


def test_local_pd_hyperplane(plane):
    lp = pd_at_prime(cyc(plane, "x"), ideal(plane, "x", "y - 1"))
    assert lp.status == "exact" and lp.value == 1


def test_local_pd_not_supported(cusp):
    lp = pd_at_prime(cyc(cusp, "x", "y"), ideal(cusp, "x - 1", "y - 1"))
    assert lp.status == "not_supported" and str(lp) == "not supported"


def test_local_pd_at_most_tier(corpus_run):
    # a certificate at tier t bounds pd_p by t at every regular prime
    for name, c in corpus_run.certificates.items():
        p = regular_rational_prime(c.ring)
        if p is None:
            continue
        lp = pd_at_prime(c.root_module, p)
        if lp.status == "exact":
            assert lp.value <= c.claimed_tier, name


def test_strictness_at_height_c(corpus_run):
    for rk, entry in (("plane", "plane/point"), ("cusp", "cusp/point"), ("a1", "a1/point"), ("line", "line/point")):
        c = corpus_run.certificates[entry]
        R = c.ring
        p = Ideal(R, c.root_module.presentation.row(0))
        assert pd_at_prime(c.root_module, p).value == codim_sing(R) == c.claimed_tier


# ------------------------------------------------------------ decomposition


def test_decompose_base_case(a1):
    c = certify(cyc(a1, "x", "y", "z"))
    dec = decompose_tier(c, -1)
    assert dec.ok and dec.P.is_zero()


def test_decompose_k_plus_R(a1):
    k = cyc(a1, "x", "y", "z")
    c = certify(direct_sum(k, PresentedModule.free(a1, 1)))
    dec = decompose_tier(c, 0)
    assert dec.checks["finite_length"] and dec.checks["pd_bound"] and dec.checks["exact"]


def test_decompose_free_has_zero_alpha(a1):
    dec = decompose_tier(certify(PresentedModule.free(a1, 2)), 0)
    assert dec.ok and dec.checks["alpha_zero"]


def test_decompose_range_checks(a1, cusp):
    c = certify(cyc(a1, "x", "y", "z"))
    with pytest.raises(UsageError):
        decompose_tier(c, 1)  # depth R - 2 = 0
    with pytest.raises(UsageError):
        decompose_tier(certify(cyc(cusp, "x", "y")), 0)  # depth 1 < 2


def test_decompose_tier_too_high(a1):
    x, y, z = a1.gens()
    M = PresentedModule.from_rows(a1, [[z, x + 2 * y], [x - 2 * y, -z]])
    with pytest.raises(UsageError, match="tier 1"):
        decompose_tier(certify(M), 0)
