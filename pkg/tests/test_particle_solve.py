"""The particle-to-matching reduction, validated wholesale against brute force."""

import random

import pytest

from stripmwis.esd import particles
from stripmwis.graph import Graph
from stripmwis.instances import line_graph_with_esd, random_esd, random_graph
from stripmwis.oracles import mwis_brute, mwm_brute
from stripmwis.particle_solve import (MissingParticleValue, gadget_graph,
                                      mwis_from_particles,
                                      reconstruct_independent_set)


def brute_vals(g, d):
    return {p.key: mwis_brute(g, p.members)[0] for p in particles(d)}


def test_missing_value_raises():
    g, d = line_graph_with_esd(Graph.build(3, [(0, 1), (1, 2)]))
    with pytest.raises(MissingParticleValue):
        gadget_graph(d, {})


def test_line_graph_identity_k3():
    h = Graph.build(3, [(0, 1), (0, 2), (1, 2)])
    ew = {(0, 1): 4, (0, 2): 7, (1, 2): 5}
    g, d = line_graph_with_esd(h, ew)
    got = mwis_from_particles(g, d, brute_vals(g, d))
    assert got == mwis_brute(g)[0] == mwm_brute(h, ew)[0] == 7


def test_matches_brute_on_line_graphs():
    rng = random.Random(99)
    for i in range(40):
        h = random_graph(rng.randint(2, 8), 0.45, 8000 + i)
        ew = {e: rng.randint(1, 9) for e in h.edges}
        g, d = line_graph_with_esd(h, ew)
        got = mwis_from_particles(g, d, brute_vals(g, d))
        assert got == mwis_brute(g, budget=32)[0], i
        assert got == mwm_brute(h, ew)[0] if h.n <= 12 else True


def test_matches_brute_on_random_decompositions():
    # general hosts with vertex sets, interiors and triangle sets
    for i in range(40):
        g, d = random_esd(8200 + i)
        got = mwis_from_particles(g, d, brute_vals(g, d))
        assert got == mwis_brute(g, d.alive)[0], i


def test_reconstruction_assembles_a_real_set():
    for i in range(25):
        g, d = random_esd(8400 + i)
        witnesses = {p.key: mwis_brute(g, p.members) for p in particles(d)}
        value, chosen = reconstruct_independent_set(g, d, witnesses)
        assert value == mwis_brute(g, d.alive)[0]
        assert g.w(chosen) == value
