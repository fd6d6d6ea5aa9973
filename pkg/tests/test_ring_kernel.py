import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ring
from tiercert.errors import GrammarError, NotEquidimensional, UsageError
from tiercert.ring_kernel import (
    Ideal,
    PolyRing,
    QuotientRing,
    RationalField,
    groebner_basis_of,
    height,
    ideal_intersect,
    ideal_quotient,
    is_prime,
    krull_dim,
    normal_form,
    parse_poly,
    radical_membership,
)
from tiercert.ring_kernel.poly import format_poly


def ideal(R, *gens):
    return Ideal(R, [R.ambient.parse(g) for g in gens])


def P(R, text):
    return R(R.ambient.parse(text))


# ------------------------------------------------------------ normal form


def test_normal_form_of_zero(plane):
    assert not normal_form(plane.zero(), ideal(plane, "x^2 - y"))


def test_normal_form_lex_single_step():
    R = ring("xy", order="lex")
    assert normal_form(P(R, "x^2"), ideal(R, "x^2 - y")) == P(R, "y")


def test_generator_reduces_to_zero(plane):
    assert not normal_form(P(plane, "y^2 - x^3"), ideal(plane, "y^2 - x^3"))


# ------------------------------------------------------------ groebner


def test_gb_already_reduced(plane):
    assert sorted(format_poly(g) for g in groebner_basis_of(ideal(plane, "x", "y"))) == ["x", "y"]


def test_gb_lex_contains_y3_minus_1():
    R = ring("xy", order="lex")
    I = ideal(R, "x^2 - y", "x*y - 1")
    gb = groebner_basis_of(I)
    assert P(R, "y^3 - 1") in gb
    assert I.contains(P(R, "y^3 - 1"))


def test_gb_unit_ideal(plane):
    I = ideal(plane, "x", "x + 1")
    assert I.is_unit()
    assert [format_poly(g) for g in groebner_basis_of(I)] == ["1"]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_gb_invariant_under_generator_permutation(seed):
    rng = random.Random(seed)
    R = ring("xy")
    x, y = R.gens()
    gens = []
    for _ in range(rng.randint(1, 3)):
        f = R.zero()
        for _ in range(rng.randint(1, 3)):
            f = f + rng.randint(1, 4) * x ** rng.randint(0, 3) * y ** rng.randint(0, 2)
        gens.append(f)
    perm = gens[:]
    rng.shuffle(perm)
    assert groebner_basis_of(Ideal(R, gens)) == groebner_basis_of(Ideal(R, perm))


# ------------------------------------------------------------ colon and intersection


def test_colon_by_unit(plane):
    I = ideal(plane, "x^2", "x*y + y^3")
    assert ideal_quotient(I, plane.one()) == I


def test_colon_xy_by_x(plane):
    assert ideal_quotient(ideal(plane, "x*y"), P(plane, "x")) == ideal(plane, "y")


def test_colon_principal(line):
    assert ideal_quotient(ideal(line, "x^2"), P(line, "x")) == ideal(line, "x")


def test_intersection_idempotent(plane):
    I = ideal(plane, "x^2", "y^3 - x")
    assert ideal_intersect(I, I) == I


def test_intersection_coprime_principal(plane):
    assert ideal_intersect(ideal(plane, "x"), ideal(plane, "y")) == ideal(plane, "x*y")


def test_intersection_mixed(plane):
    assert ideal_intersect(ideal(plane, "x^2", "y"), ideal(plane, "x")) == ideal(plane, "x^2", "x*y")


def _random_ideal(rng, R, k):
    gens = []
    for _ in range(k):
        f = R.zero()
        for _ in range(rng.randint(1, 3)):
            f = f + rng.randint(1, 4) * R.gens()[0] ** rng.randint(0, 3) * R.gens()[-1] ** rng.randint(0, 3)
        gens.append(f)
    return Ideal(R, gens)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_colon_contains_and_multiplies_into(seed):
    rng = random.Random(seed)
    R = ring("xy")
    I = _random_ideal(rng, R, rng.randint(1, 2))
    a = _random_ideal(rng, R, 1).gens[0]
    Q = ideal_quotient(I, a)
    assert Q.contains_ideal(I)
    assert all(I.contains(a * g) for g in Q.generators())


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_intersection_lies_in_both_and_contains_product(seed):
    rng = random.Random(seed)
    R = ring("xy")
    I = _random_ideal(rng, R, rng.randint(1, 2))
    J = _random_ideal(rng, R, rng.randint(1, 2))
    X = ideal_intersect(I, J)
    assert I.contains_ideal(X) and J.contains_ideal(X)
    assert X.contains_ideal(I * J)


# ------------------------------------------------------------ radical, dim, height


def test_radical_membership_examples(plane, line):
    assert radical_membership(P(line, "x"), ideal(line, "x^2"))
    assert not radical_membership(P(plane, "y"), ideal(plane, "x^2"))
    assert radical_membership(P(plane, "x + y"), ideal(plane, "x^2 + 2*x*y + y^2"))


def test_krull_dim_examples(plane):
    assert krull_dim(Ideal(plane, [])) == 2
    assert krull_dim(ideal(plane, "y^2 - x^3")) == 1
    assert krull_dim(ideal(plane, "1")) == -1


@pytest.mark.parametrize("order", ["grevlex", "lex"])
def test_krull_dim_independent_of_order(order):
    rings = [ring("xy", order=order), ring("xy", "y^2 - x^3", order=order), ring("xyz", "x^2+y^2+z^2", order=order)]
    dims = [R.dim for R in rings]
    assert dims == [2, 1, 2]
    R = rings[1]
    assert krull_dim(ideal(R, "x - 1", "y - 1")) == 0


def test_height_examples(cusp, plane, a1):
    assert height(ideal(cusp, "x", "y")) == 1
    assert height(Ideal(a1, [])) == 0
    assert height(ideal(plane, "x", "y")) == 2


def test_height_refuses_unknown_equidimensionality():
    R = ring("xyz", "x*z", "y*z")  # plane union line
    with pytest.raises(NotEquidimensional):
        height(ideal(R, "x", "y", "z"))


# ------------------------------------------------------------ primality


def test_prime_linear(plane):
    r = is_prime(ideal(plane, "x", "y"))
    assert r.is_prime and r.layer == "L1"


def test_not_prime_with_witness(plane):
    I = ideal(plane, "x*y")
    r = is_prime(I)
    assert r.is_not_prime
    f, g = r.witness
    assert I.contains(f * g) and not I.contains(f) and not I.contains(g)


def test_cusp_equation_prime(plane):
    r = is_prime(ideal(plane, "y^2 - x^3"))
    assert r.is_prime and r.layer == "L2"


def test_a1_equation_prime():
    R = ring("xyz")
    assert is_prime(ideal(R, "x^2 + y^2 + z^2")).is_prime


def test_finite_ring_layer(line):
    assert is_prime(ideal(line, "x^2 + 2")).is_prime  # -2 = 3 is not a square mod 5
    r = is_prime(ideal(line, "x^2 - 1"))
    assert r.is_not_prime


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
def test_never_prime_for_a_product(a, b, c, d):
    R = ring("xy")
    f = P(R, f"x + {a}*y + {b}")
    g = P(R, f"y^2 + {c}*x + {d}")
    r = is_prime(Ideal(R, [f * g]))
    assert not r.is_prime


# ------------------------------------------------------------ parsing and rings


def test_parse_and_format_roundtrip(plane):
    f = parse_poly("3x^2y - (x+y)^2 + 7", plane.ambient)
    assert parse_poly(format_poly(f), plane.ambient) == f


def test_parse_error_location(plane):
    with pytest.raises(GrammarError) as e:
        parse_poly("x + * y", plane.ambient)
    assert (e.value.line, e.value.column) == (1, 5)


def test_unknown_variable_suggestion(plane):
    with pytest.raises(GrammarError, match="did you mean 'x'"):
        parse_poly("x + xx", PolyRing(["x", "xy"]))


def test_unit_defining_ideal_rejected():
    with pytest.raises(UsageError):
        QuotientRing(PolyRing(["x"]), ["x", "x + 1"])


def test_rational_field():
    R = ring("xy", field=RationalField())
    I = ideal(R, "1/2*x - y", "y^2 - 1/3")
    assert I.contains(P(R, "x^2 - 4/3"))
