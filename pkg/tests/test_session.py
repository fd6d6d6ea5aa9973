import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tiercert.errors import GrammarError, UsageError
from tiercert.module_kernel import Matrix
from tiercert.session import format_session, parse_session

CUSP = """ring R = F5[x,y]/(y^2 - x^3) order grevlex;
ideal P = (x - 1, y - 1);
module M1 = R/P;
module K = R/(x, y);
module F = R^2;
"""


def test_single_ring_declaration():
    s = parse_session("ring R = F5[x,y]/(y^2 - x^3);")
    assert s.names("ring") == ["R"]
    R = s.ring("R")
    assert R.dim == 1 and R.ambient.order.spec == "grevlex"


def test_matrix_module_declaration():
    s = parse_session("ring A = F5[x,y,z]/(x^2+y^2+z^2);\nmodule M = coker [[z, x+2*y],[x-2*y, -z]];")
    M = s.module("M")
    R = s.ring()
    x, y, z = R.gens()
    assert M.presentation == Matrix.from_rows(R, [[z, x + 2 * y], [x - 2 * y, -z]])


def test_missing_semicolon_location():
    with pytest.raises(GrammarError) as e:
        parse_session("ring R = F5[x,y]/(y^2 - x^3)\nideal P = (x);")
    assert (e.value.line, e.value.column) == (1, 29)


def test_error_inside_later_line():
    with pytest.raises(GrammarError) as e:
        parse_session("ring R = F5[x];\nideal P = (x +);")
    assert e.value.line == 2 and e.value.column == 15


def test_unknown_names_get_suggestions():
    with pytest.raises(GrammarError, match="did you mean 'ring'"):
        parse_session("rng R = F5[x];")
    with pytest.raises(GrammarError, match="did you mean 'P'"):
        parse_session("ring R = F5[x];\nideal P = (x);\nmodule M = R/PP;")
    s = parse_session(CUSP)
    with pytest.raises(UsageError, match="did you mean 'M1'"):
        s.module("M2")


def test_duplicate_names_rejected():
    with pytest.raises(GrammarError, match="already declared"):
        parse_session("ring R = F5[x];\nideal R = (x);")


def test_object_needs_ring():
    with pytest.raises(GrammarError, match="declare a ring"):
        parse_session("ideal P = (x);")


def test_ragged_matrix_rejected():
    with pytest.raises(GrammarError, match="row has 1 entries"):
        parse_session("ring R = F5[x,y];\nmodule M = coker [[x, y], [x]];")


def test_overrides():
    s = parse_session(CUSP, field="F7", order="lex")
    R = s.ring()
    assert R.field.characteristic == 7 and R.ambient.order.spec == "lex"


def test_pretty_printer_roundtrip():
    out = format_session(parse_session(CUSP))
    assert format_session(parse_session(out)) == out
    assert "module M1 = coker [[x-1, y-1]];" in out


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.tuples(st.integers(0, 4), st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=4),
    st.integers(1, 3),
)
def test_roundtrip_random_modules(terms, nrows):
    poly = " + ".join(f"{c}*x^{a}*y^{b}" for c, a, b in terms)
    rows = ", ".join(f"[{poly}, x]" for _ in range(nrows))
    text = f"ring R = F5[x,y]/(y^2 - x^3);\nmodule M = coker [{rows}];\n"
    out = format_session(parse_session(text))
    assert format_session(parse_session(out)) == out
    assert parse_session(out).module("M").presentation == parse_session(text).module("M").presentation
