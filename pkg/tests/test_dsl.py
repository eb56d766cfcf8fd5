import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbitcodes.cli import main
from orbitcodes.dsl import format_element, format_subspace, parse_element, parse_subspace, tokenize
from orbitcodes.errors import DSLSyntaxError, InvalidSubfield, TowerMismatch
from orbitcodes.gf import tower_for
from orbitcodes.subspace import line_sum, span

N12_LITERAL = (
    "(2*z^10 + 2*z^9 + 2*z^7 + z^6 + z^4 + 2*z^3 + z + 2)*(z^2+1)*F(3,2)"
    " + (2*z^10 + 2*z^9 + 2*z^7 + z^6 + z^4 + 2*z^3 + z + 2)^2*(z^2+1)*F(3,2) + (z^3+z+1)*F(3,2)"
)
N16 = (
    "(2*z^15 + z^10 + 2*z^6 + z^5 + z^4 + z^3 + 2*z + 1)*F(3,2)"
    " + (z^14 + 2*z^12 + z^5 + 2*z^4 + z^2 + 1)*F(3,2) + (z^5+1)*F(3,2) + (z^4+z^3+1)*F(3)"
)

# (q, n, text, expected dimension)
VALID = [
    (3, 11, "span(z^13, z^17, z^21, z^23)", 4),
    (3, 11, "span(z^13,z^17,z^21,z^23)", 4),
    (3, 10, "z^1708*F(3,2) + z^732*F(3,2) + z^91*F(3)", 5),
    (3, 10, "z^1708*F(3,2) + z^732*F(3,2) + z^91*F(3,1)", 5),
    (2, 14, "z^11*F(2,2)+z^13*F(2,2)+z^14*F(2,2)", 6),
    (3, 12, N12_LITERAL, 6),
    (3, 12, "z^6643*(z^2+1)*F(3,2) + z^13286*(z^2+1)*F(3,2) + (z^3+z+1)*F(3,2)", 6),
    (3, 16, N16, 7),
    (2, 4, "F(2,2)", 2),
    (2, 4, "F(2)", 1),
    (2, 4, "span()", 0),
    (2, 4, "span(1)", 1),
    (2, 4, "span(z)", 1),
    (2, 4, "span(z^0, z^1, z^2, z^3)", 4),
    (2, 4, "span(z^15)", 1),
    (2, 4, "span(z + 1, z^2 + z)", 2),
    (2, 4, "span(z+1, z^2+z, z^2+1)", 2),
    (3, 4, "span(2*z^3 + z - 1)", 1),
    (3, 4, "span(-z)", 1),
    (3, 4, "span(5*z)", 1),
    (3, 4, "span(3*z + 1)", 1),
    (3, 4, "span(z*z, z^2)", 1),
    (3, 4, "span((z+1)^2, z^2 + 2*z + 1)", 1),
    (3, 4, "(z+1)*F(3,2)", 2),
    (3, 4, "z*F(3,4)", 4),
    (3, 4, "F(3,2) + span(z)", 3),
    (3, 4, "  span ( z ^ 2 ,  z )  + F ( 3 ) ", 3),
    (3, 4, "span(z^80)", 1),
    (4, 3, "z*F(4) + z^2*F(4)", 2),
    (4, 3, "span(z, z^22)", 1),
    (5, 2, "span(4*z + 3)", 1),
    (2, 6, "z^3*F(2,3) + span(z)", 4),
    (2, 6, "span(z^2 - z)", 1),
    (7, 2, "2*z*F(7) + 3*F(7)", 2),
]

# (q, n, text, error position)
MALFORMED = [
    (2, 4, "span(z^2,,z)", 9),
    (2, 4, "span(z", 6),
    (2, 4, "span z)", 5),
    (2, 4, "z*F(2", 5),
    (2, 4, "z^", 2),
    (2, 4, "z^x", 2),
    (2, 4, "span(z) +", 9),
    (2, 4, "span(z) span(1)", 8),
    (2, 4, "z", 1),
    (2, 4, "F(2,)", 4),
    (2, 4, "span(z $ 1)", 7),
    (2, 4, "", 0),
    (2, 4, "*F(2)", 0),
    (2, 4, "span(())", 6),
    (2, 4, "0*F(2)", 0),
]


@pytest.mark.parametrize("q,n,text,k", VALID)
def test_valid_strings_parse_and_roundtrip(q, n, text, k):
    t = tower_for(q, n)
    u = parse_subspace(text, t)
    assert u.k == k
    printed = format_subspace(u)
    assert parse_subspace(printed, t) == u
    assert format_subspace(parse_subspace(printed, t)) == printed


@pytest.mark.parametrize("q,n,text,pos", MALFORMED)
def test_malformed_strings_report_position(q, n, text, pos):
    with pytest.raises(DSLSyntaxError) as exc:
        parse_subspace(text, tower_for(q, n))
    assert exc.value.position == pos
    lines = exc.value.pretty().splitlines()
    assert lines[-1].index("^") - 2 == pos


def test_string_counts():
    assert len(VALID) + len(MALFORMED) >= 30


def test_semantics_match_constructors(t3_10):
    z = t3_10.power_of_z
    u = parse_subspace("z^1708*F(3,2) + z^732*F(3,2) + z^91*F(3)", t3_10)
    assert u == line_sum([(z(1708), 2), (z(732), 2), (z(91), 1)])
    assert parse_element("z^59048", t3_10) == z(0)
    assert parse_element("z^59049", t3_10) == z(1)
    assert parse_element("4*z", t3_10) == z(1)
    assert parse_subspace("span(z^13, z^17)", t3_10) == span([z(13), z(17)])


def test_semantic_errors(t3_10):
    with pytest.raises(TowerMismatch):
        parse_subspace("z*F(2,2)", t3_10)
    with pytest.raises(InvalidSubfield):
        parse_subspace("z*F(3,3)", t3_10)


def test_tokens():
    kinds = [tok.kind for tok in tokenize("span(2*z^3)")]
    assert kinds == ["span", "(", "int", "*", "z", "^", "int", ")", "end"]


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([(2, 5), (3, 4), (4, 3), (3, 10)]), st.data())
def test_element_format_roundtrip(qn, data):
    t = tower_for(*qn)
    a = t.element([data.draw(st.integers(0, t.p - 1)) for _ in range(t.m)])
    text = format_element(a)
    assert parse_element(text, t) == a
    assert format_element(parse_element(text, t)) == text


@pytest.mark.parametrize("text,pos", [("span(z^2,,z)", 9), ("span(z", 6), ("z*F(2", 5)])
def test_cli_exit_code_and_caret(text, pos, capsys):
    code = main(["dist", "--q", "2", "--n", "4", "--subspace", text])
    err = capsys.readouterr().err
    assert code == 2
    lines = err.rstrip("\n").splitlines()
    assert f"position {pos}" in lines[0]
    assert lines[-1].index("^") - 2 == pos
