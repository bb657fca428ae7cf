import json

import pytest

from artinstab import (
    INFINITY,
    GraphError,
    adjacent,
    components,
    induced,
    parse_graph,
    serialize_graph,
    standard_graph,
    to_dot,
)

from conftest import build_graph


def test_parse_basic_path_fills_defaults():
    g = parse_graph(
        b'{"generators": ["a", "b", "c"], "relations": [["a", "b", 3], ["b", "c", 3]]}'
    )
    assert g.generators == ("a", "b", "c")
    assert g.label("a", "b") == 3
    assert g.label("b", "c") == 3
    assert g.label("a", "c") == 2


def test_parse_zero_and_inf_both_mean_infinity():
    g = parse_graph(
        '{"generators": ["a", "b", "c"], "relations": [["a", "b", 3], ["a", "c", 0], ["b", "c", "inf"]]}'
    )
    assert g.label("a", "c") == INFINITY
    assert g.label("b", "c") == INFINITY


def test_parse_infinite_by_default():
    g = parse_graph(
        '{"generators": ["a", "b", "c"], "relations": [["a", "b", 2]], "infinite_by_default": true}'
    )
    assert g.label("a", "b") == 2
    assert g.label("a", "c") == INFINITY
    assert g.label("b", "c") == INFINITY


@pytest.mark.parametrize(
    "text, fragment",
    [
        ('{"generators": ["a"], "relations": [["a", "a", 3]]}', "self-pair"),
        ('{"generators": ["a", "a"]}', "duplicate"),
        ('{"generators": ["a", "b"], "relations": [["a", "b", 1]]}', "label"),
        ('{"generators": ["a", "b"], "relations": [["a", "c", 3]]}', "unknown"),
        (
            '{"generators": ["a", "b"], "relations": [["a", "b", 3], ["b", "a", 4]]}',
            "conflicting",
        ),
        (
            '{"generators": ["a", "b"], "relations": [["a", "b", 3], ["b", "a", 3]]}',
            "twice",
        ),
        ('{"generators": []}', "empty"),
        ('{"generators": ["a"], "bogus": 1}', "unknown keys"),
        ('{"generators": ["a", "b"], "relations": [["a", "b"]]}', r"relations\[0\]"),
        ('{"generators": ["a b"]}', "invalid generator"),
        ('{"generators": ["ä"]}', "invalid generator"),
        ("not json", "malformed"),
        ("[1, 2]", "object"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(GraphError, match=fragment):
        parse_graph(text)


def test_roundtrip_preserves_label_map():
    g = parse_graph(
        '{"generators": ["c", "a", "b"], "relations": [["a", "b", 5], ["a", "c", 0]]}'
    )
    again = parse_graph(serialize_graph(g))
    assert again.labels == g.labels
    assert again.generators == g.generators


def test_induced_restriction():
    a3 = build_graph("abc", ("a", "b", 3), ("b", "c", 3))
    sub = induced(a3, ("a", "c"))
    assert sub.generators == ("a", "c")
    assert sub.label("a", "c") == 2
    empty_ok = induced(a3, ())
    assert empty_ok.generators == ()


def test_induced_consistency_with_nested_subsets():
    e7 = standard_graph("E", 7)
    outer = induced(e7, [f"s{i}" for i in range(1, 7)])
    inner = induced(e7, ["s1", "s2", "s3"])
    assert induced(outer, ["s1", "s2", "s3"]).labels == inner.labels


def test_induced_e7_gives_e6_diagram():
    e7 = standard_graph("E", 7)
    e6 = standard_graph("E", 6)
    assert induced(e7, [f"s{i}" for i in range(1, 7)]).labels == e6.labels


def test_induced_unknown_vertex():
    a3 = build_graph("abc", ("a", "b", 3), ("b", "c", 3))
    with pytest.raises(ValueError, match="unknown generator"):
        induced(a3, ("a", "z"))


def test_components_basic():
    a3 = build_graph("abc", ("a", "b", 3), ("b", "c", 3))
    assert components(a3, ("a", "c")) == [("a",), ("c",)]
    assert components(a3, ("a", "b", "c")) == [("a", "b", "c")]
    assert components(a3, ()) == []


def test_components_e7_example():
    e7 = standard_graph("E", 7)
    got = components(e7, ("s1", "s2", "s4", "s5", "s6", "s7"))
    assert got == [("s1", "s4", "s5", "s6", "s7"), ("s2",)]


def test_components_infinite_label_counts_as_edge():
    g = build_graph("ab", ("a", "b", INFINITY))
    assert components(g, ("a", "b")) == [("a", "b")]


def test_adjacent():
    a3 = build_graph("abc", ("a", "b", 3), ("b", "c", 3))
    assert adjacent(a3, ("a",)) == ("b",)
    assert adjacent(a3, ("a", "b", "c")) == ()
    e7 = standard_graph("E", 7)
    assert adjacent(e7, ("s1", "s2", "s3", "s4", "s6")) == ("s5", "s7")


def test_to_dot():
    a2 = build_graph("ab", ("a", "b", 3))
    dot = to_dot(a2)
    assert '"a" -- "b";' in dot and "label" not in dot
    i25 = build_graph("ab", ("a", "b", 5))
    assert 'label="5"' in to_dot(i25)
    inf = build_graph("ab", ("a", "b", INFINITY))
    assert 'label="∞"' in to_dot(inf)
    # commuting pairs draw no edge
    free = build_graph("ab")
    assert "--" not in to_dot(free)


def test_serialization_is_sorted_and_stable():
    g = build_graph("dcba", ("d", "a", 4), ("c", "b", 3))
    first = serialize_graph(g)
    second = serialize_graph(parse_graph(first))
    assert first == second
    data = json.loads(first)
    assert data["generators"] == ["a", "b", "c", "d"]
    assert data["relations"] == [["a", "d", 4], ["b", "c", 3]]
