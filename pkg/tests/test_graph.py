import pytest
from hypothesis import given, settings, strategies as st

from stripmwis.graph import (Graph, GraphFormatError, closed_neighborhood,
                             components, parse_graph, serialize_graph)


def small_graphs():
    @st.composite
    def build(draw):
        n = draw(st.integers(0, 9))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
        weights = draw(st.lists(st.integers(0, 50), min_size=n, max_size=n))
        return Graph.build(n, edges, weights)
    return build()


def test_build_basics():
    g = Graph.build(3, [(0, 1), (1, 2)], [5, 1, 1])
    assert g.n == 3
    assert g.edges == [(0, 1), (1, 2)]
    assert g.degree(1) == 2
    assert g.has_edge(0, 1) and not g.has_edge(0, 2)
    assert g.w({0, 2}) == 6


def test_build_rejects_bad_input():
    with pytest.raises(ValueError):
        Graph.build(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.build(2, [(0, 5)])
    with pytest.raises(ValueError):
        Graph.build(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph.build(1, [], [-1])


def test_parse_diagnostics():
    cases = {
        "e 0 1\n": "missing header",
        "p x 1\n": "malformed header",
        "p 2 1\ne 0 5\n": "out-of-range",
        "p 2 1\ne 1 0\n": "not increasing",
        "p 2 0\nw 0 1\nw 0 2\n": "duplicate weight",
        "p 2 2\ne 0 1\ne 0 1\n": "duplicate edge",
        "p 2 0\nw 0 -3\n": "negative weight",
        "p 2 2\ne 0 1\n": "edges",
    }
    for text, frag in cases.items():
        with pytest.raises(GraphFormatError) as e:
            parse_graph(text)
        assert frag in str(e.value), text


def test_parse_comments_and_defaults():
    g = parse_graph("# hi\np 3 1 # header\nw 0 7\ne 1 2\n")
    assert g.weight == (7, 1, 1)
    assert g.edges == [(1, 2)]


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_serialize_roundtrip(g):
    assert parse_graph(serialize_graph(g)) == g


@settings(max_examples=40, deadline=None)
@given(small_graphs(), st.data())
def test_components_partition(g, data):
    alive = frozenset(data.draw(st.sets(st.integers(0, max(g.n - 1, 0)))
                                if g.n else st.just(set())))
    alive &= frozenset(range(g.n))
    comps = components(g, alive)
    union = set()
    for c in comps:
        assert not (union & c)
        union |= c
        # components are connected and closed under adjacency within alive
        assert closed_neighborhood(g, c, alive) <= c | closed_neighborhood(g, c, alive)
        for v in c:
            assert g.adj_set[v] & alive <= c
    assert union == set(alive)
    assert comps == sorted(comps, key=lambda c: min(c) if c else -1)


@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_closed_neighborhood_is_union(g):
    s = set(range(0, g.n, 2))
    within = frozenset(range(g.n))
    expect = set(s)
    for v in s:
        expect |= set(g.adj_set[v])
    assert closed_neighborhood(g, s, within) == expect
