import pytest

from tiercert.ring_kernel import PolyRing, QuotientRing


def ring(variables, *relations, order="grevlex", field=None):
    return QuotientRing(PolyRing(list(variables), field, order), list(relations))


@pytest.fixture
def plane():
    return ring("xy")


@pytest.fixture
def line():
    return ring("x")


@pytest.fixture
def cusp():
    return ring("xy", "y^2 - x^3")


@pytest.fixture
def a1():
    return ring("xyz", "x^2 + y^2 + z^2")


@pytest.fixture
def dual():
    return ring("x", "x^2")


@pytest.fixture
def node():
    return ring("xy", "x*y")


@pytest.fixture(scope="session")
def corpus_run():
    from tiercert.corpus import build_certificates
    from tiercert.tier_builder import BuilderConfig

    return build_certificates(BuilderConfig())


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
