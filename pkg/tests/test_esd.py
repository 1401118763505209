"""Decomposition model: validation, particles, ESDF, cleaning, projections."""

import pytest
from fractions import Fraction

from stripmwis.esd import (EsdfFormatError, ExtendedStripDecomposition,
                           Separation, classify_separated_components,
                           dom_potato, is_locally_cleaned_shape, is_rigid,
                           local_clean, parse_esdf, particles, potential,
                           preimage, projection, restrict_esd, separation_separator,
                           serialize_esdf, substantial_particle_separator,
                           validate_esd, _edge_key)
from stripmwis.graph import Graph
from stripmwis.instances import line_graph_with_esd, random_esd, random_separation


def k3():
    return Graph.build(3, [(0, 1), (0, 2), (1, 2)])


def single_edge_esd():
    """Host = one edge; edge set {0,1,2} with interfaces {0} and {2}."""
    g = Graph.build(3, [(0, 1), (1, 2)])
    return g, ExtendedStripDecomposition(
        base=g, alive=frozenset({0, 1, 2}),
        host_vertices=frozenset({0, 1}), host_edges=frozenset({(0, 1)}),
        eta_vertex={}, eta_edge={(0, 1): {0, 1, 2}},
        eta_interface={((0, 1), 0): {0}, ((0, 1), 1): {2}}, eta_triangle={})


def test_line_graph_of_k3_and_claw():
    # both K3 and K_{1,3} have L(H) = K3
    g, d = line_graph_with_esd(k3())
    assert g.n == 3 and len(g.edges) == 3
    assert validate_esd(d) is None and is_rigid(d)
    claw = Graph.build(4, [(0, 1), (0, 2), (0, 3)])
    g2, d2 = line_graph_with_esd(claw)
    assert g2.edges == k3().edges
    assert validate_esd(d2) is None


def test_validate_catches_partition_violation():
    g, d = single_edge_esd()
    bad = ExtendedStripDecomposition(
        base=g, alive=d.alive, host_vertices=d.host_vertices,
        host_edges=d.host_edges, eta_vertex={0: {0}}, eta_edge=d.eta_edge,
        eta_interface=d.eta_interface)
    assert "partition violated" in validate_esd(bad)


def test_validate_catches_uncontained_interface():
    g, d = single_edge_esd()
    bad = ExtendedStripDecomposition(
        base=g, alive=d.alive, host_vertices=d.host_vertices,
        host_edges=d.host_edges, eta_vertex={},
        eta_edge={(0, 1): {0, 1}},
        eta_interface={((0, 1), 0): {0}, ((0, 1), 1): {2}})
    err = validate_esd(bad)
    assert err is not None


def test_validate_catches_illegal_cross_edge():
    # vertex 2 sits in a host-vertex set but is adjacent to interior vertex 1
    g = Graph.build(3, [(0, 1), (1, 2)])
    d = ExtendedStripDecomposition(
        base=g, alive=frozenset({0, 1, 2}),
        host_vertices=frozenset({0, 1}), host_edges=frozenset({(0, 1)}),
        eta_vertex={1: {2}}, eta_edge={(0, 1): {0, 1}},
        eta_interface={((0, 1), 0): {0}, ((0, 1), 1): {0}})
    assert "illegal base edge" in validate_esd(d)


def test_validate_catches_incomplete_interfaces():
    # two host edges meet at 1; their interfaces there must be complete
    g = Graph.build(2, [])  # no base edge between 0 and 1
    d = ExtendedStripDecomposition(
        base=g, alive=frozenset({0, 1}),
        host_vertices=frozenset({0, 1, 2}),
        host_edges=frozenset({(0, 1), (1, 2)}),
        eta_vertex={}, eta_edge={(0, 1): {0}, (1, 2): {1}},
        eta_interface={((0, 1), 0): set(), ((0, 1), 1): {0},
                       ((1, 2), 1): {1}, ((1, 2), 2): set()})
    assert "not complete" in validate_esd(d)


def test_particle_kinds_and_contents():
    g, d = single_edge_esd()
    ps = {p.key: p.members for p in particles(d)}
    e = (0, 1)
    assert ps[("vertex", (0,))] == frozenset()
    assert ps[("edge-interior", (e,))] == frozenset({1})
    assert ps[("half-edge", (e, 0))] == frozenset({0, 1})
    assert ps[("half-edge", (e, 1))] == frozenset({1, 2})
    assert ps[("full-edge", (e,))] == frozenset({0, 1, 2})
    assert len(ps) == 6  # 2 vertex + interior + 2 half + full


def test_preimage():
    g, d = single_edge_esd()
    assert preimage(d, {0}) == frozenset({0, 1, 2})
    assert preimage(d, set()) == frozenset()


def test_potential_frozen_values():
    g, d = single_edge_esd()
    assert potential(d) == 0 - 2 - 1 - 2
    out = local_clean(g, d)
    # both ends have degree 1 -> suppressed into a single host vertex
    assert len(out.host_vertices) == 1 and not out.host_edges
    assert potential(out) == 3 - 1 - 0 - 1
    assert is_locally_cleaned_shape(out)


def test_clean_removes_empty_interface_edge():
    g = Graph.build(2, [(0, 1)])
    d = ExtendedStripDecomposition(
        base=g, alive=frozenset({0, 1}),
        host_vertices=frozenset({0, 1, 2}),
        host_edges=frozenset({(0, 1), (1, 2)}),
        eta_vertex={1: {1}}, eta_edge={(0, 1): {0}, (1, 2): set()},
        eta_interface={((0, 1), 0): set(), ((0, 1), 1): {0},
                       ((1, 2), 1): set(), ((1, 2), 2): set()})
    assert validate_esd(d) is None
    out = local_clean(g, d)
    assert validate_esd(out) is None
    assert is_locally_cleaned_shape(out)
    assert out.alive == d.alive


def test_esdf_roundtrip_on_random_corpus():
    for i in range(30):
        g, d = random_esd(900 + i)
        again = parse_esdf(serialize_esdf(d), g, alive=d.alive)
        assert again == d, i


def test_esdf_diagnostics():
    g = Graph.build(3, [])
    for text, frag in [
        ("he 0 1\n", "undeclared host vertex"),
        ("hv 0\nee 0 1: 0\n", "undeclared host edge"),
        ("hv 0\nhv 1\nhe 0 1\nev 0: 0\nee 0 1: 0\n", "partition violated"),
        ("hv 0\nhv 1\nhe 0 1\nee 0 1: 9\n", "out of range"),
        ("hv 0\nhv 1\nhe 0 1\nix 0 1 @ 0: 2\n", "not in its edge set"),
        ("ht 0 1 2\n", "missing host edge"),
        ("xx 1\n", "malformed"),
    ]:
        with pytest.raises(EsdfFormatError) as e:
            parse_esdf(text, g)
        assert frag in str(e.value), text


def test_restrict_preserves_validity():
    for i in range(20):
        g, d = random_esd(1200 + i)
        drop = frozenset(v for v in d.alive if v % 3 == 0)
        r = restrict_esd(d, drop)
        assert r.alive == d.alive - drop
        assert validate_esd(r) is None


def test_projection_simple():
    # base P4: 0-1-2-3; decomposition of {1,2,3} with edge set {2}
    g = Graph.build(4, [(0, 1), (1, 2), (2, 3)])
    d = ExtendedStripDecomposition(
        base=g, alive=frozenset({1, 2, 3}),
        host_vertices=frozenset({0, 1}), host_edges=frozenset({(0, 1)}),
        eta_vertex={0: {1}, 1: {3}}, eta_edge={(0, 1): {2}},
        eta_interface={((0, 1), 0): {2}, ((0, 1), 1): {2}})
    assert validate_esd(d) is None
    assert projection(g, 0, d) == frozenset({2})  # via the non-edge-set vertex 1
    with pytest.raises(ValueError):
        projection(g, 1, d)


def test_dom_potato_requires_degree_two():
    g, d = single_edge_esd()
    with pytest.raises(ValueError):
        dom_potato(d, 0)


def test_separation_check_rejects_crossing_edge():
    g, d = single_edge_esd()
    with pytest.raises(ValueError):
        Separation(frozenset({0}), frozenset({1})).check(d)
    sep = Separation(frozenset({0, 1}), frozenset({1}))
    assert separation_separator(d, sep) == frozenset({2})
    classify_separated_components(d, sep)


def test_substantial_separator_preconditions():
    g, d = single_edge_esd()
    with pytest.raises(ValueError):
        substantial_particle_separator(g, d, Fraction(1, 2))
    # the full-edge particle holds everything -> heavier than (1-delta)w
    with pytest.raises(ValueError):
        substantial_particle_separator(g, d, Fraction(1, 3))


def test_random_separation_verifier():
    for i in range(25):
        g, d = random_esd(1500 + i)
        sep = random_separation(d, i)
        classify_separated_components(d, sep)  # raises on failure
