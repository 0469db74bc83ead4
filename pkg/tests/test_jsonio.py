import json
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import graphs
from lapforge import jsonio
from lapforge.bounds import isoperimetric_constant
from lapforge.errors import ParseError
from lapforge.graph import WeightedGraph
from lapforge.poly import RatPoly
from lapforge.symfunc import PSym
from lapforge.tilings import EXAMPLE_TILING

K2_TEXT = '{"vertices":[{"id":[0],"weight":"1"},{"id":[1],"weight":"1"}],"edges":[{"u":[0],"v":[1],"weight":"1"}]}'


def test_graph_text_is_stable():
    G = WeightedGraph({0: 1, 1: 1}, [(0, 1, 1)])
    assert jsonio.dump_graph(G) == K2_TEXT
    assert jsonio.parse_graph(K2_TEXT) == G


@given(graphs())
def test_graph_round_trip(G):
    assert jsonio.parse_graph(jsonio.dump_graph(G)) == G


@pytest.mark.parametrize(
    "text",
    [
        "{",
        "[]",
        '{"vertices":[]}',
        '{"vertices":[{"id":[0],"weight":1}],"edges":[]}',
        '{"vertices":[{"id":[0],"weight":"0.5"}],"edges":[]}',
        '{"vertices":[{"id":[0],"weight":"1/0"}],"edges":[]}',
        '{"vertices":[{"id":[0],"weight":"0"}],"edges":[]}',
        '{"vertices":[{"id":[0],"weight":"1"}],"edges":[{"u":[0],"v":[3],"weight":"1"}]}',
        '{"vertices":[{"id":[],"weight":"1"}],"edges":[]}',
        '{"vertices":[{"id":[0],"weight":"1","x":1}],"edges":[]}',
    ],
)
def test_malformed_graphs(text):
    with pytest.raises(ParseError):
        jsonio.parse_graph(text)


def test_fraction_strings():
    assert jsonio.parse_fraction("-3/6") == Fraction(-1, 2)
    assert jsonio.fraction_str(Fraction(4, 2)) == "2"
    for bad in ("1.5", "1e3", " 1", "+1", 2):
        with pytest.raises(ParseError):
            jsonio.parse_fraction(bad)


def test_fields_polys_and_psym():
    f = {(0,): Fraction(1, 2), (1, 2): Fraction(-3)}
    doc = jsonio.scalar_field_to_json(f)
    assert doc == {"field": {"0": "1/2", "1,2": "-3"}}
    assert jsonio.parse_scalar_field(json.dumps(doc)) == f
    F = {0: Fraction(2), 3: Fraction(1, 3)}
    assert jsonio.parse_vector_field(jsonio.vector_field_to_json(F)) == F
    p = RatPoly([0, -2, 1])
    assert jsonio.poly_to_json(p) == {"coeffs": ["0", "-2", "1"]}
    assert jsonio.parse_poly(jsonio.poly_to_json(p)) == p
    x = PSym({(1, 1, 1): 1, (2, 1): -3, (3,): 2})
    doc = jsonio.psym_to_json(x)
    assert [t["partition"] for t in doc["terms"]] == [[1, 1, 1], [2, 1], [3]]
    assert jsonio.parse_psym(doc) == x


def test_cut_and_tiling():
    rep = isoperimetric_constant(WeightedGraph({0: 1, 1: 1}, [(0, 1, 1)]))
    assert jsonio.cut_to_json(rep) == {"S": [[0]], "boundary": "1", "ratio": "1", "constant": "1"}
    assert jsonio.parse_tiling(jsonio.dumps(jsonio.tiling_to_json(EXAMPLE_TILING))) == EXAMPLE_TILING
    with pytest.raises(ParseError):
        jsonio.parse_tiling('{"outer":{"x":"0","y":"0","w":"1","h":"1"},"tiles":[]}')
