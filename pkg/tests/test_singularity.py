import pytest

from conftest import ring
from tiercert.module_kernel import PresentedModule, annihilator
from tiercert.ring_kernel import Ideal, radical_membership
from tiercert.singularity import (
    codim_sing,
    in_sing,
    is_isolated_singularity,
    is_regular_ring,
    sing_ideal,
    supported_in_sing,
)


def P(R, text):
    return R(R.ambient.parse(text))


def cyc(R, *gens):
    return PresentedModule.cyclic(R, [P(R, g) for g in gens])


def test_polynomial_ring_is_regular(plane):
    assert sing_ideal(plane).is_unit()
    assert is_regular_ring(plane)
    assert codim_sing(plane) == 2
    assert not is_isolated_singularity(plane)


def test_cusp_locus(cusp):
    J = sing_ideal(cusp)
    assert not J.is_unit()
    assert radical_membership(P(cusp, "x"), J) and radical_membership(P(cusp, "y"), J)
    assert codim_sing(cusp) == 1
    assert is_isolated_singularity(cusp)


def test_a1_locus(a1):
    J = sing_ideal(a1)
    assert all(radical_membership(v, J) for v in a1.gens())
    assert codim_sing(a1) == 2 and is_isolated_singularity(a1)


def test_everything_singular(dual):
    assert codim_sing(dual) == -1


def test_double_line_not_isolated():
    R = ring("xy", "x^2")
    assert codim_sing(R) == -1
    assert not is_isolated_singularity(R)


def test_node(node):
    assert codim_sing(node) == 1 and is_isolated_singularity(node)


def test_in_sing(cusp):
    assert in_sing(Ideal(cusp, cusp.gens()))
    assert not in_sing(Ideal(cusp, [P(cusp, "x-1"), P(cusp, "y-1")]))


def test_supported_in_sing_examples(cusp):
    assert supported_in_sing(PresentedModule.zero(cusp))
    assert supported_in_sing(cyc(cusp, "x", "y"))
    assert not supported_in_sing(PresentedModule.free(cusp, 1))


@pytest.mark.parametrize(
    "gens,expected",
    [(("x", "y"), True), (("x^2", "y"), True), (("x",), True), (("x-1", "y-1"), False), (("y-x",), False)],
)
def test_support_biconditional(cusp, gens, expected):
    M = cyc(cusp, *gens)
    ann = annihilator(M)
    by_radical = all(radical_membership(g, ann) for g in sing_ideal(cusp).generators())
    assert supported_in_sing(M) == by_radical == expected


@pytest.mark.parametrize("name", ["plane", "line", "cusp", "a1"])
def test_codim_equals_dim_on_domains(name, request):
    R = request.getfixturevalue(name)
    J = sing_ideal(R)
    small = J.is_unit() or J.dim() < R.dim
    assert (codim_sing(R) == R.dim) == small
