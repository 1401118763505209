"""Seeded instance and decomposition generators for tests and benchmarks.

Everything here is a deterministic function of its parameters and seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .esd import ExtendedStripDecomposition, validate_esd, _edge_key
from .graph import Graph
from .oracles import find_induced_sttt


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str  # 'line-graph' | 'random-sttt-free' | 'cograph' | 'random'
    n: int
    p: float = 0.5
    t: int = 2
    seed: int = 0
    wlo: int = 1
    whi: int = 1


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_graph(n: int, p: float, seed, wlo: int = 1, whi: int = 1) -> Graph:
    rng = _rng(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    weights = [rng.randint(wlo, whi) for _ in range(n)]
    return Graph.build(n, edges, weights)


def random_connected_graph(n: int, p: float, seed, wlo: int = 1, whi: int = 1) -> Graph:
    """Random spanning tree plus independent extra edges."""
    rng = _rng(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    edges = set()
    for i in range(1, n):
        a, b = perm[rng.randrange(i)], perm[i]
        edges.add((min(a, b), max(a, b)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    weights = [rng.randint(wlo, whi) for _ in range(n)]
    return Graph.build(n, sorted(edges), weights)


def random_sttt_free(n: int, p: float, t: int, seed, wlo: int = 1, whi: int = 1,
                     cap: int = 10000, connected: bool = False) -> Graph:
    """Erdős–Rényi draws, resampled until the subdivided-claw detector comes
    back empty (and the graph is connected, when requested)."""
    rng = _rng(seed)
    for _ in range(cap):
        g = (random_connected_graph if connected else random_graph)(
            n, p, rng, wlo, whi)
        if find_induced_sttt(g, t) is None:
            return g
    raise RuntimeError(f"resample cap {cap} exceeded for n={n}, p={p}, t={t}")


def cograph(n: int, seed, wlo: int = 1, whi: int = 1) -> Graph:
    """Random cograph (recursive disjoint union / join)."""
    rng = _rng(seed)

    def rec(lo: int, hi: int) -> list:
        if hi - lo <= 1:
            return []
        mid = rng.randint(lo + 1, hi - 1)
        edges = rec(lo, mid) + rec(mid, hi)
        if rng.random() < 0.5:  # join the two halves
            edges += [(a, b) for a in range(lo, mid) for b in range(mid, hi)]
        return edges

    weights = [rng.randint(wlo, whi) for _ in range(n)]
    return Graph.build(n, rec(0, n), weights)


def line_graph_with_esd(h: Graph, edge_weights=None):
    """The line graph of h plus its canonical strip decomposition.

    Vertices of the result are the edges of h in sorted order; host vertex x
    keeps id x (isolated host vertices are dropped since their sets would be
    empty). Every edge set and both its interfaces are the same singleton.
    """
    h_edges = h.edges
    if edge_weights is None:
        edge_weights = {e: 1 for e in h_edges}
    idx = {e: i for i, e in enumerate(h_edges)}
    g_edges = [(idx[e1], idx[e2])
               for i, e1 in enumerate(h_edges)
               for e2 in h_edges[i + 1:]
               if set(e1) & set(e2)]
    g = Graph.build(len(h_edges), g_edges, [edge_weights[e] for e in h_edges])

    live_hosts = frozenset(x for x in range(h.n) if h.degree(x) > 0)
    ee = {e: frozenset({idx[e]}) for e in h_edges}
    ei = {}
    for e in h_edges:
        ei[(e, e[0])] = frozenset({idx[e]})
        ei[(e, e[1])] = frozenset({idx[e]})
    d = ExtendedStripDecomposition(
        base=g, alive=frozenset(range(g.n)),
        host_vertices=live_hosts, host_edges=frozenset(h_edges),
        eta_vertex={}, eta_edge=ee, eta_interface=ei, eta_triangle={})
    assert validate_esd(d) is None
    return g, d


def random_esd(seed, max_host: int = 5, max_set: int = 3):
    """A random *valid* decomposition (generally not rigid or cleaned): random
    host, possibly empty sets and interfaces, the mandatory interface-
    completeness edges, and a sprinkling of optional legal cross edges.
    Returns (base graph, decomposition)."""
    rng = _rng(seed)
    nh = rng.randint(1, max_host)
    hv = list(range(nh))
    he = [(x, y) for x in range(nh) for y in range(x + 1, nh)
          if rng.random() < 0.5]

    counter = [0]

    def fresh(k: int) -> set:
        out = set(range(counter[0], counter[0] + k))
        counter[0] += k
        return out

    ev = {x: fresh(rng.randint(0, 2)) for x in hv}
    ee, ei = {}, {}
    for e in he:
        s = fresh(rng.randint(0, max_set))
        ee[e] = s
        for end in e:
            ei[(e, end)] = {v for v in s if rng.random() < 0.6}
    tris = [(x, y, z) for x in hv for y in hv for z in hv
            if x < y < z and (x, y) in he and (y, z) in he and (x, z) in he]
    et = {}
    for t in tris:
        if rng.random() < 0.7:
            et[t] = fresh(rng.randint(1, 2))

    n = counter[0]
    edges: set = set()

    def link(u, v):
        if u != v:
            edges.add((min(u, v), max(u, v)))

    # mandatory: interfaces at one host vertex are pairwise complete
    for x in hv:
        inc = [e for e in he if x in e]
        for i in range(len(inc)):
            for j in range(i + 1, len(inc)):
                for u in ei[(inc[i], x)]:
                    for v in ei[(inc[j], x)]:
                        link(u, v)

    def sprinkle(s, p=0.4):
        s = sorted(s)
        for i in range(len(s)):
            for j in range(i + 1, len(s)):
                if rng.random() < p:
                    link(s[i], s[j])

    for x in hv:
        sprinkle(ev[x])
    for e in he:
        sprinkle(ee[e])
    for t in et:
        sprinkle(et[t])
    # optional legal cross edges: interface at x <-> vertex set of x
    for e in he:
        for end in e:
            for u in ei[(e, end)]:
                for v in ev[end]:
                    if rng.random() < 0.4:
                        link(u, v)
    # optional legal cross edges: triangle set <-> double interfaces
    for t, ts in et.items():
        for a, b in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2])):
            e = _edge_key(a, b)
            for u in ts:
                for v in ei[(e, a)] & ei[(e, b)]:
                    if rng.random() < 0.5:
                        link(u, v)

    g = Graph.build(n, sorted(edges), [rng.randint(1, 5) for _ in range(n)])
    d = ExtendedStripDecomposition(
        base=g, alive=frozenset(range(n)),
        host_vertices=frozenset(hv), host_edges=frozenset(he),
        eta_vertex=ev, eta_edge=ee, eta_interface=ei, eta_triangle=et)
    assert validate_esd(d) is None
    return g, d


def random_separation(d: ExtendedStripDecomposition, seed):
    """A random separation (A, B) of the host graph: pick a host cut set S,
    then deal out the components of host − S to the two sides."""
    from .esd import Separation
    from .graph import components as graph_components

    rng = _rng(seed)
    hv = sorted(d.host_vertices)
    s = {x for x in hv if rng.random() < 0.4}
    # crude host-as-graph component computation
    hmax = (max(hv) + 1) if hv else 0
    host_g = Graph.build(hmax, sorted(d.host_edges))
    rest = set(hv) - s
    a, b = set(s), set(s)
    for comp in graph_components(host_g, rest):
        (a if rng.random() < 0.5 else b).update(comp)
    sep = Separation(frozenset(a), frozenset(b))
    sep.check(d)
    return sep


def build_instance(spec: GeneratorSpec):
    """Materialize a GeneratorSpec; returns (Graph, decomposition-or-None)."""
    if spec.kind == "line-graph":
        h = random_graph(spec.n, spec.p, spec.seed)
        rng = _rng(spec.seed + 1)
        weights = {e: rng.randint(spec.wlo, spec.whi) for e in h.edges}
        return line_graph_with_esd(h, weights)
    if spec.kind == "random-sttt-free":
        return random_sttt_free(spec.n, spec.p, spec.t, spec.seed,
                                spec.wlo, spec.whi), None
    if spec.kind == "cograph":
        return cograph(spec.n, spec.seed, spec.wlo, spec.whi), None
    if spec.kind == "random":
        return random_graph(spec.n, spec.p, spec.seed, spec.wlo, spec.whi), None
    raise ValueError(f"unknown generator kind {spec.kind!r}")
