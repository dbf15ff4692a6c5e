import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hybridorder import (
    DuplicateElement,
    ParseError,
    Relation,
    RelationDocument,
    UnknownElement,
    UnsupportedCombination,
    emit,
    interval_representation,
    order_dim,
    parse_relation,
    triangle_representation,
)
from hybridorder.io import hasse_pairs

from conftest import rel


def test_parse_json():
    r = parse_relation('{"elements":["x1","x2"],"pairs":[["x1","x2"]]}')
    assert r == rel(["x1", "x2"], [("x1", "x2")])


def test_parse_edgelist():
    r = parse_relation("x1 x2\nx3 x4\n", "edgelist")
    assert r == rel(["x1", "x2", "x3", "x4"], [("x1", "x2"), ("x3", "x4")])


def test_edgelist_header_and_comments():
    r = parse_relation("#elements: a b c\n# comment\na b\n", "edgelist")
    assert r.elements == ("a", "b", "c") and r.label_pairs == {("a", "b")}
    with pytest.raises(UnknownElement):
        parse_relation("#elements: a\na b\n", "edgelist")


def test_parse_errors():
    with pytest.raises(DuplicateElement):
        parse_relation('{"elements":["a","a"],"pairs":[]}')
    with pytest.raises(UnknownElement):
        parse_relation('{"elements":["a"],"pairs":[["a","b"]]}')
    with pytest.raises(ParseError) as exc:
        parse_relation('{"elements": [1}')
    assert exc.value.line == 1
    with pytest.raises(ParseError) as exc:
        parse_relation("a b\na b c\n", "edgelist")
    assert exc.value.line == 2 and exc.value.position == 5


def test_json_round_trip_and_canonical_form():
    text = '{"pairs":[["b","a"],["a","c"]],"elements":["b","a","c"]}'
    r = parse_relation(text)
    out = emit(r)
    assert parse_relation(out) == r
    assert emit(parse_relation(out)) == out
    assert json.loads(out) == {"elements": ["b", "a", "c"], "pairs": [["b", "a"], ["a", "c"]]}


def test_dot_reduces_transitive_edges(chain3):
    out = emit(chain3, "dot")
    assert '"x1" -> "x2"' in out and '"x2" -> "x3"' in out
    assert '"x1" -> "x3"' not in out


def test_hasse_of_cyclic_keeps_edges():
    r = rel(["a", "b"], [("a", "b"), ("b", "a")])
    assert sorted(hasse_pairs(r)) == [(0, 1), (1, 0)]


def test_svg_triangles(two_plus_two):
    out = emit(triangle_representation(two_plus_two), "svg")
    assert out.count("<polygon") == 4 and out.count("<line") == 2


def test_svg_intervals(chain3):
    out = emit(interval_representation(chain3), "svg")
    assert out.startswith("<svg") and out.count("stroke-width") == 3


def test_rationals_as_strings(antichain2):
    from hybridorder import unit_interval_representation

    d = json.loads(emit(unit_interval_representation(rel(["a", "b", "c"], [("a", "c")]))))
    for ivs in d["intervals"].values():
        for a, b in ivs:
            assert "/" in a and "/" in b


def test_unsupported_combinations(two_plus_two):
    with pytest.raises(UnsupportedCombination):
        emit(order_dim(two_plus_two), "svg")
    with pytest.raises(UnsupportedCombination):
        emit(two_plus_two, "svg")
    with pytest.raises(UnsupportedCombination):
        emit(rel(["a b"]), "edgelist")
    with pytest.raises(UnsupportedCombination):
        emit(object())


def test_document_invariants():
    with pytest.raises(UnknownElement):
        RelationDocument(("a",), (("a", "z"),))
    doc = RelationDocument.from_relation(rel(["a", "b"], [("a", "b")]), name="t")
    assert doc.to_dict()["name"] == "t"

label = st.text(st.characters(blacklist_categories=("Cs",)), min_size=1, max_size=5)


@st.composite
def documents(draw):
    els = draw(st.lists(label, unique=True, max_size=7))
    pairs = draw(st.lists(st.tuples(st.sampled_from(els), st.sampled_from(els)), max_size=15)) if els else []
    return RelationDocument(tuple(els), tuple(pairs))


@settings(max_examples=200, deadline=None)
@given(documents())
def test_json_round_trip_property(doc):
    r = doc.to_relation()
    assert parse_relation(emit(r)) == r
