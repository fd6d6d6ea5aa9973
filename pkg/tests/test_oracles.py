import random

from hypothesis import given, settings
from hypothesis import strategies as st

from tiercert import oracles
from tiercert.corpus import oracle_instance


def test_piece_of_xy():
    orc = oracles.GradedOracle(2, 5)
    sp = orc.piece([{(1, 1): 1}], 3)
    assert sp.dim == 2  # x^2 y, x y^2


def test_member_and_nonmember():
    orc = oracles.GradedOracle(2, 5)
    G = [{(2, 0): 1, (0, 1): 0}, {(1, 1): 1}]
    assert orc.member({(3, 0): 2, (2, 1): 1}, G)
    assert not orc.member({(0, 3): 1}, G)


def test_colon_by_variable():
    orc = oracles.GradedOracle(2, 5)
    # (xy : x) = (y)
    for d in range(4):
        assert orc.colon_piece([{(1, 1): 1}], {(1, 0): 1}, d) == orc.piece([{(0, 1): 1}], d)


def test_intersection_of_coordinate_axes():
    orc = oracles.GradedOracle(2, 5)
    for d in range(4):
        assert orc.intersection_piece([{(1, 0): 1}], [{(0, 1): 1}], d) == orc.piece([{(1, 1): 1}], d)


def test_kernel_is_left_kernel():
    k = oracles.kernel([[1, 2], [2, 4], [0, 1]], 5)
    assert k == [[3, 1, 0]]


def test_rational_points_witness_nonmembership():
    pts = oracles.rational_points([{(1, 0): 1, (0, 0): 4}], 2, 5)  # x - 1
    assert all(p[0] == 1 for p in pts) and len(pts) == 5


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_engine_agrees_with_oracle(seed):
    res = oracle_instance(random.Random(seed))
    assert all(res.values()), res
