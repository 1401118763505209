"""Combine per-particle MWIS values into the MWIS of the whole graph.

The reduction builds a small matching instance over the host graph plus one
dummy vertex per host edge. The untouched state pays vertex sets, edge
interiors and triangle sets up front (`base_value`); matching an edge fully
or halfway swaps in the corresponding particle value via a gain edge. The
construction is validated wholesale against brute force in the test suite —
its correctness rests on that equivalence, not on derivation.
"""

from __future__ import annotations

from .blossom import WeightedMatchingInstance, max_weight_matching
from .esd import ExtendedStripDecomposition, particles
from .graph import Graph


class MissingParticleValue(KeyError):
    pass


def gadget_graph(d: ExtendedStripDecomposition, vals: dict):
    """Return (base_value, instance, meta) for the particle-combination matching.

    `vals` maps particle keys (kind, anchor) to MWIS weights. Instance
    vertices are host vertices followed by one dummy per host edge; `meta`
    maps instance edges back to (host edge, state) for reconstruction.
    """
    def val(kind, anchor):
        try:
            return vals[(kind, anchor)]
        except KeyError:
            raise MissingParticleValue(f"no value for particle {(kind, anchor)}") from None

    hosts = sorted(d.host_vertices)
    hidx = {x: i for i, x in enumerate(hosts)}
    edges = sorted(d.host_edges)
    tris = d.host_triangles()

    base_value = 0
    for x in hosts:
        base_value += val("vertex", (x,))
    for e in edges:
        base_value += val("edge-interior", (e,))
    for t in tris:
        base_value += val("triangle", (t,))

    inst_edges = []
    meta = {}
    for k, e in enumerate(edges):
        x, y = e
        dummy = len(hosts) + k
        tri_vals = sum(val("triangle", (t,)) for t in tris if x in t and y in t)
        gain_full = (val("full-edge", (e,)) - val("vertex", (x,)) - val("vertex", (y,))
                     - val("edge-interior", (e,)) - tri_vals)
        gain_x = (val("half-edge", (e, x)) - val("vertex", (x,))
                  - val("edge-interior", (e,)))
        gain_y = (val("half-edge", (e, y)) - val("vertex", (y,))
                  - val("edge-interior", (e,)))
        for u, v, w, state in ((hidx[x], hidx[y], gain_full, "full"),
                               (hidx[x], dummy, gain_x, "half-x"),
                               (hidx[y], dummy, gain_y, "half-y")):
            inst_edges.append((u, v, w))
            meta[(min(u, v), max(u, v))] = (e, state)

    inst = WeightedMatchingInstance(len(hosts) + len(edges), tuple(inst_edges))
    return base_value, inst, meta


def mwis_from_particles(g: Graph, d: ExtendedStripDecomposition, vals: dict) -> int:
    base_value, inst, _ = gadget_graph(d, vals)
    gain, _ = max_weight_matching(inst)
    return base_value + gain


def reconstruct_independent_set(g: Graph, d: ExtendedStripDecomposition,
                                witnesses: dict) -> tuple[int, frozenset[int]]:
    """Soundness check helper: assemble a concrete independent set matching
    the value computed by mwis_from_particles.

    `witnesses` maps particle keys to (weight, vertex set) optimum pairs for
    the induced subgraph of each particle.
    """
    vals = {k: w for k, (w, _) in witnesses.items()}
    base_value, inst, meta = gadget_graph(d, vals)
    gain, match = max_weight_matching(inst)

    touched_hosts = set()
    touched_edges = {}
    for ie in match:
        e, state = meta[ie]
        touched_edges[e] = state
        x, y = e
        if state == "full":
            touched_hosts.update((x, y))
        elif state == "half-x":
            touched_hosts.add(x)
        else:
            touched_hosts.add(y)

    tris = d.host_triangles()
    touched_tris = {t for t in tris
                    for e, st in touched_edges.items()
                    if st == "full" and set(e) <= set(t)}

    chosen: set[int] = set()
    total = 0
    for e, state in touched_edges.items():
        x, y = e
        key = {"full": ("full-edge", (e,)),
               "half-x": ("half-edge", (e, x)),
               "half-y": ("half-edge", (e, y))}[state]
        w, s = witnesses[key]
        chosen |= s
        total += w
    for x in sorted(d.host_vertices):
        if x not in touched_hosts:
            w, s = witnesses[("vertex", (x,))]
            chosen |= s
            total += w
    for e in sorted(d.host_edges):
        if e not in touched_edges:
            w, s = witnesses[("edge-interior", (e,))]
            chosen |= s
            total += w
    for t in tris:
        if t not in touched_tris:
            w, s = witnesses[("triangle", (t,))]
            chosen |= s
            total += w

    assert total == base_value + gain, "reconstruction value mismatch"
    for u in chosen:
        for v in chosen:
            assert u == v or not g.has_edge(u, v), \
                f"reconstructed set not independent: edge ({u},{v})"
    return total, frozenset(chosen)
