"""Separator machinery for the branching solver: Gyárfás paths, relevant and
level sets, branchability, inferred decompositions, the pluggable decomposer
backends, and the balanced-separator-or-decomposition routine.

All threshold comparisons are exact integer cross-multiplications; no
floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx

from .esd import (ExtendedStripDecomposition, is_rigid, local_clean, particles,
                  restrict_esd, validate_esd)
from .graph import Graph, closed_neighborhood, components


def ilog(n: int) -> int:
    """max(2, ceil(log2 n)); the floor of 2 keeps small-n thresholds sane."""
    if n < 0:
        raise ValueError("ilog of negative number")
    return max(2, (n - 1).bit_length()) if n >= 1 else 2


class BackendError(Exception):
    pass


@dataclass
class AlgoConfig:
    """Solver parameters. `c_t` defaults to 34*t, the smallest value the
    analysis permits; `test_mode` shrinks the threshold denominators so that
    desk-scale instances actually exercise the separator cases (exactness
    never depends on these constants, only the runtime analysis does)."""
    t: int
    c_t: int | None = None
    test_mode: bool = False
    warnings: list = field(default_factory=list)

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("t must be >= 1")
        if self.c_t is None:
            self.c_t = 34 * self.t
        if self.c_t < 1:
            raise ValueError("c_t must be >= 1")
        if not self.test_mode and self.c_t < 34 * self.t:
            raise ValueError("c_t must be >= 34*t outside test mode")

    def big_denom(self, n_cap: int) -> int:
        """Denominator D in the thresholds N/D (relevant set, N-good,
        boosted-separator check)."""
        if self.test_mode:
            return 4
        return 32 * self.c_t ** 2 * ilog(n_cap) ** 2

    def case_i(self, n_cap: int, n_alive: int) -> int:
        """Depth parameter for balanced_sep_or_esd, capped by ilog of the
        current subgraph so the search's precondition holds."""
        base = 2 if self.test_mode else ilog(200 * self.c_t ** 3 * ilog(n_cap) ** 3)
        return max(1, min(base, ilog(n_alive)))

    def warn(self, key: str, value) -> None:
        self.warnings.append(f"{key}={value}")


# --------------------------------------------------------------------------
# Gyárfás path
# --------------------------------------------------------------------------

def gyarfas_path(g: Graph, alive, weights=None) -> tuple[int, ...]:
    """An induced path Q such that every component of alive − N[V(Q)] has
    weight at most half the total; empty iff no component is heavy.

    Recursive scheme: while the working set has a component heavier than
    half the ORIGINAL total, hop to the lowest-id neighbor of that unique
    heavy component and restrict the working set to it.
    """
    alive = frozenset(alive)
    if weights is None:
        weights = {v: g.weight[v] for v in alive}
    total = sum(weights[v] for v in alive)

    def wsum(s):
        return sum(weights[v] for v in s)

    heavy0 = [c for c in components(g, alive) if 2 * wsum(c) > total]
    if not heavy0:
        return ()
    assert len(heavy0) == 1, "two components each above half the total weight"
    working = heavy0[0]
    u = min(working)
    path = [u]
    while True:
        rest = working - closed_neighborhood(g, {u}, working)
        heavy = [c for c in components(g, rest) if 2 * wsum(c) > total]
        if not heavy:
            break
        assert len(heavy) == 1
        comp = heavy[0]
        nbr_of_comp = (closed_neighborhood(g, comp, working) - comp)
        u2 = min(nbr_of_comp)
        path.append(u2)
        working = comp | {u2}
        u = u2

    q = tuple(path)
    _verify_gyarfas(g, alive, weights, total, q)
    return q


def _verify_gyarfas(g: Graph, alive, weights, total, q):
    for i, u in enumerate(q):
        for j in range(i + 2, len(q)):
            assert not g.has_edge(u, q[j]), "returned path is not induced"
        if i + 1 < len(q):
            assert g.has_edge(u, q[i + 1]), "returned sequence is not a path"
    rem = alive - closed_neighborhood(g, set(q), alive)
    for c in components(g, rem):
        assert 2 * sum(weights[v] for v in c) <= total, \
            "component heavier than half survives the path neighborhood"


# --------------------------------------------------------------------------
# Relevant sets, level sets, branchability
# --------------------------------------------------------------------------

def relevant(g: Graph, alive, x_set, n_cap: int, cfg: AlgoConfig) -> frozenset[int]:
    """Vertices of N[X] (within alive) adjacent to a still-large component
    of alive − N[X]; 'large' means more than n_cap / D vertices."""
    alive = frozenset(alive)
    nx_set = closed_neighborhood(g, x_set, alive)
    d = cfg.big_denom(n_cap)
    big: set[int] = set()
    for c in components(g, alive - nx_set):
        if len(c) * d > n_cap:
            big |= c
    return frozenset(v for v in nx_set if g.adj_set[v] & big)


def is_boosted_bs(g: Graph, alive, x_set, s: int, cfg: AlgoConfig | None = None) -> bool:
    """Is N[X] an s-boosted balanced separator for the current subgraph?"""
    alive = frozenset(alive)
    if len(frozenset(x_set)) > s:
        return False
    comps_before = components(g, alive)
    cmax = max((len(c) for c in comps_before), default=0)
    nx_set = closed_neighborhood(g, x_set, alive)
    return all(len(c) * 16 * s * s <= cmax
               for c in components(g, alive - nx_set))


def level_set(g: Graph, alive, flist, j: int) -> frozenset[int]:
    """Vertices of alive covered by at least j list-neighborhoods
    (multiplicity counted)."""
    counts = membership_counts(g, alive, flist)
    if j <= 0:
        return frozenset(alive)
    return frozenset(v for v, c in counts.items() if c >= j)


def membership_counts(g: Graph, alive, flist) -> dict:
    alive = frozenset(alive)
    counts = {v: 0 for v in alive}
    for f in flist:
        for v in closed_neighborhood(g, f, alive):
            counts[v] += 1
    return counts


def is_branchable(g: Graph, alive, v: int, n_cap: int, f1, f2,
                  counts1=None, counts2=None):
    """Smallest j >= 1 whose level set meets N[v] in at least n_cap/2^j
    vertices (either list); None if no such j exists. Precomputed membership
    counts may be passed in when checking many vertices of one subgraph."""
    alive = frozenset(alive)
    nbhd = closed_neighborhood(g, {v}, alive)
    c1 = membership_counts(g, alive, f1) if counts1 is None else counts1
    c2 = membership_counts(g, alive, f2) if counts2 is None else counts2
    max_level = max(list(c1.values()) + list(c2.values()) + [0])
    for j in range(1, max_level + 1):
        hits1 = sum(1 for u in nbhd if c1[u] >= j)
        hits2 = sum(1 for u in nbhd if c2[u] >= j)
        if hits1 << j >= n_cap or hits2 << j >= n_cap:
            return j
    return None


# --------------------------------------------------------------------------
# Inferred decompositions and N-goodness
# --------------------------------------------------------------------------

def infer_esd(g: Graph, x_set, base_esd: ExtendedStripDecomposition,
              alive) -> ExtendedStripDecomposition:
    """Decomposition of the current subgraph built from the stored one:
    components touching N[X] become isolated host vertices; the rest get a
    private copy of the stored host with its sets intersected."""
    alive = frozenset(alive)
    nx_set = closed_neighborhood(g, x_set, alive)
    next_id = 0
    hv: set[int] = set()
    he: set = set()
    ev: dict = {}
    ee: dict = {}
    ei: dict = {}
    et: dict = {}
    for comp in components(g, alive):
        if comp & nx_set:
            hv.add(next_id)
            ev[next_id] = comp
            next_id += 1
        else:
            remap = {x: next_id + k for k, x in enumerate(sorted(base_esd.host_vertices))}
            next_id += len(remap)
            hv.update(remap.values())
            for x in base_esd.host_vertices:
                ev[remap[x]] = base_esd.eta_vertex[x] & comp
            for (x, y) in base_esd.host_edges:
                ne = (min(remap[x], remap[y]), max(remap[x], remap[y]))
                he.add(ne)
                ee[ne] = base_esd.eta_edge[(x, y)] & comp
                ei[(ne, remap[x])] = base_esd.eta_interface[((x, y), x)] & comp
                ei[(ne, remap[y])] = base_esd.eta_interface[((x, y), y)] & comp
            for t, s in base_esd.eta_triangle.items():
                nt = tuple(sorted(remap[x] for x in t))
                if s & comp:
                    et[nt] = s & comp
    return ExtendedStripDecomposition(
        base=g, alive=alive, host_vertices=frozenset(hv), host_edges=frozenset(he),
        eta_vertex=ev, eta_edge=ee, eta_interface=ei, eta_triangle=et)


def is_n_good(d: ExtendedStripDecomposition, n_cap: int, cfg: AlgoConfig) -> bool:
    """No particle may hold over (1 - 1/D) * n_cap vertices."""
    den = cfg.big_denom(n_cap)
    return all(len(p.members) * den <= (den - 1) * n_cap for p in particles(d))


# --------------------------------------------------------------------------
# Decomposer backends
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class DecomposeOutcome:
    kind: str  # 'core' | 'esd'  (an induced-claw outcome never arises here)
    core: frozenset[int] | None = None
    esd: ExtendedStripDecomposition | None = None


def trivial_component_esd(g: Graph, alive) -> ExtendedStripDecomposition:
    """One isolated host vertex per connected component."""
    comps = components(g, frozenset(alive))
    return ExtendedStripDecomposition(
        base=g, alive=frozenset(alive),
        host_vertices=frozenset(range(len(comps))), host_edges=frozenset(),
        eta_vertex={i: c for i, c in enumerate(comps)},
        eta_edge={}, eta_interface={}, eta_triangle={})


def line_graph_esd(g: Graph, alive) -> ExtendedStripDecomposition | None:
    """If the induced subgraph is a line graph, return the canonical strip
    decomposition over its root graph (singleton edge sets); else None."""
    alive = frozenset(alive)
    next_id = 0
    hv: set[int] = set()
    he: set = set()
    ee: dict = {}
    ei: dict = {}
    for comp in components(g, alive):
        if len(comp) == 1:
            v = next(iter(comp))
            e = (next_id, next_id + 1)
            hv.update(e)
            he.add(e)
            ee[e] = frozenset({v})
            ei[(e, e[0])] = frozenset({v})
            ei[(e, e[1])] = frozenset({v})
            next_id += 2
            continue
        sub = nx.Graph()
        sub.add_nodes_from(sorted(comp))
        for u in sorted(comp):
            for v in g.adj[u]:
                if v > u and v in comp:
                    sub.add_edge(u, v)
        try:
            root = nx.inverse_line_graph(sub)
        except nx.NetworkXError:
            return None
        cells = sorted(root.nodes())
        cell_id = {c: next_id + k for k, c in enumerate(cells)}
        next_id += len(cells)
        hv.update(cell_id.values())
        # each base vertex appears in exactly two cells -> its host edge
        owner: dict = {}
        for c in cells:
            for v in c:
                owner.setdefault(v, []).append(cell_id[c])
        for v in sorted(comp):
            ends = owner.get(v, [])
            if len(ends) != 2:
                return None
            e = (min(ends), max(ends))
            he.add(e)
            ee.setdefault(e, set()).add(v)
            ei.setdefault((e, e[0]), set()).add(v)
            ei.setdefault((e, e[1]), set()).add(v)
    d = ExtendedStripDecomposition(
        base=g, alive=alive, host_vertices=frozenset(hv), host_edges=frozenset(he),
        eta_vertex={}, eta_edge=ee, eta_interface=ei, eta_triangle={})
    if validate_esd(d) is not None:
        return None
    return d


class GyarfasBackend:
    """Default decomposer: Gyárfás paths for separator cores; canonical
    line-graph decompositions (when applicable) or trivial per-component
    decompositions for the decomposition outcome."""

    name = "gyarfas"

    def esd(self, g: Graph, alive, cfg: AlgoConfig):
        alive = frozenset(alive)
        q = gyarfas_path(g, alive, {v: 1 for v in alive})
        x = frozenset(q)
        rem = alive - closed_neighborhood(g, x, alive)
        return x, trivial_component_esd(g, rem)

    def decompose(self, g: Graph, alive, weights, cfg: AlgoConfig) -> DecomposeOutcome:
        alive = frozenset(alive)
        total = sum(weights[v] for v in alive)
        heavy = any(2 * sum(weights[v] for v in c) > total
                    for c in components(g, alive))
        if not heavy:
            return DecomposeOutcome("esd", esd=trivial_component_esd(g, alive))
        d = line_graph_esd(g, alive)
        if d is not None and all(
                2 * sum(weights[v] for v in p.members) <= total for p in particles(d)):
            return DecomposeOutcome("esd", esd=d)
        q = gyarfas_path(g, alive, weights)
        return DecomposeOutcome("core", core=frozenset(q))


class BruteBackend:
    """Exhaustive reference decomposer for tiny graphs: searches separator
    cores by increasing size."""

    name = "brute"
    max_n = 16

    def _cores_by_size(self, alive):
        from itertools import combinations
        verts = sorted(alive)
        for k in range(len(verts) + 1):
            for combo in combinations(verts, k):
                yield frozenset(combo)

    def esd(self, g: Graph, alive, cfg: AlgoConfig):
        alive = frozenset(alive)
        if len(alive) > self.max_n:
            raise BackendError(f"brute backend limited to {self.max_n} vertices")
        for x in self._cores_by_size(alive):
            rem = alive - closed_neighborhood(g, x, alive)
            if all(2 * len(c) <= len(alive) for c in components(g, rem)):
                return x, trivial_component_esd(g, rem)
        raise BackendError("unreachable: the full vertex set is always a core")

    def decompose(self, g: Graph, alive, weights, cfg: AlgoConfig) -> DecomposeOutcome:
        alive = frozenset(alive)
        if len(alive) > self.max_n:
            raise BackendError(f"brute backend limited to {self.max_n} vertices")
        total = sum(weights[v] for v in alive)
        for x in self._cores_by_size(alive):
            rem = alive - closed_neighborhood(g, x, alive)
            if all(100 * sum(weights[v] for v in c) <= 99 * total
                   for c in components(g, rem)):
                return DecomposeOutcome("core", core=x)
        raise BackendError("unreachable")


class FileBackend:
    """Consumes an externally supplied decomposition (ESDF file) and serves
    restrictions of it; never produces separator cores."""

    name = "file"

    def __init__(self, path: str):
        self.path = path
        self._full = None

    def _load(self, g: Graph) -> ExtendedStripDecomposition:
        if self._full is None:
            from .esd import parse_esdf
            with open(self.path, encoding="utf-8") as fh:
                self._full = parse_esdf(fh.read(), g)
        return self._full

    def _restricted(self, g: Graph, alive) -> ExtendedStripDecomposition:
        full = self._load(g)
        if not frozenset(alive) <= full.alive:
            raise BackendError("supplied decomposition does not cover the subgraph")
        d = restrict_esd(full, full.alive - frozenset(alive))
        return local_clean(g, d)

    def esd(self, g: Graph, alive, cfg: AlgoConfig):
        d = self._restricted(g, alive)
        n = len(frozenset(alive))
        if any(2 * len(p.members) > n for p in particles(d)):
            raise BackendError("supplied decomposition has a particle over half the "
                               "subgraph; cannot honor the contract")
        return frozenset(), d

    def decompose(self, g: Graph, alive, weights, cfg: AlgoConfig) -> DecomposeOutcome:
        d = self._restricted(g, alive)
        total = sum(weights[v] for v in alive)
        if any(2 * sum(weights[v] for v in p.members) > total for p in particles(d)):
            raise BackendError("supplied decomposition has a particle over half the "
                               "weight; cannot honor the contract")
        return DecomposeOutcome("esd", esd=d)


def make_backend(spec: str):
    if spec == "gyarfas":
        return GyarfasBackend()
    if spec == "brute":
        return BruteBackend()
    if spec.startswith("file:"):
        return FileBackend(spec[len("file:"):])
    raise ValueError(f"unknown backend {spec!r}")


# --------------------------------------------------------------------------
# Subroutines used by the solver
# --------------------------------------------------------------------------

def esd_subroutine(g: Graph, alive, cfg: AlgoConfig, backend):
    """Discover a core X such that alive − N[X] has a rigid decomposition
    with every particle at most half the subgraph (verified here)."""
    alive = frozenset(alive)
    x, d = backend.esd(g, alive, cfg)
    err = validate_esd(d)
    if err is not None:
        raise BackendError(f"backend produced an invalid decomposition: {err}")
    if not is_rigid(d):
        raise BackendError("backend produced a non-rigid decomposition")
    if d.alive != alive - closed_neighborhood(g, x, alive):
        raise BackendError("backend decomposition does not cover alive - N[X]")
    n = len(alive)
    if any(2 * len(p.members) > n for p in particles(d)):
        raise BackendError("backend particle exceeds half the subgraph")
    if len(x) > cfg.c_t * ilog(n):
        cfg.warn("esd_core_size", f"{len(x)}>{cfg.c_t}*ilog({n})")
    return x, d


def _verify_esd_outcome(d: ExtendedStripDecomposition, a_set, i: int):
    den = 1 << (i + 2)
    assert validate_esd(d) is None and is_rigid(d)
    for p in particles(d):
        assert den * len(p.members & a_set) <= (den - 1) * len(a_set), \
            "decomposition particle holds too much of the target set"


def balanced_sep_or_esd(g: Graph, alive, a_set, i: int, cfg: AlgoConfig, backend):
    """Either a core C (N[C] an |A|/2^i-balanced separator for (G', A)) or a
    rigid decomposition in which no particle holds over (1 − 1/2^{i+2})|A|
    of A. Both outcomes are verified before returning.

    Mirrors the constructive proof: an inner loop drives the heavy component
    of A below half using the backend on indicator weights, and an outer
    loop over j < i splits every still-heavy component.
    """
    alive = frozenset(alive)
    a_set = frozenset(a_set) & alive
    if i > ilog(len(alive)):
        raise ValueError("depth parameter exceeds ilog of the subgraph")
    den = 1 << (i + 2)

    comps = components(g, alive)
    if len(comps) >= 2 and all(
            den * len(c & a_set) <= (den - 1) * len(a_set) for c in comps):
        d = trivial_component_esd(g, alive)
        _verify_esd_outcome(d, a_set, i)
        return DecomposeOutcome("esd", esd=d)

    core: set[int] = set()
    for j in range(i):
        rem = alive - closed_neighborhood(g, core, alive)
        heavy = [c for c in components(g, rem)
                 if len(c & a_set) << (j + 1) >= len(a_set) and c & a_set]
        for comp in heavy:
            z = comp & a_set
            out = _drive_below_half(g, alive, z, core, cfg, backend)
            if out is not None:
                _verify_esd_outcome(out, a_set, i)
                return DecomposeOutcome("esd", esd=out)

    nxc = closed_neighborhood(g, core, alive)
    for c in components(g, alive - nxc):
        assert len(c & a_set) << i <= len(a_set), \
            "separator core failed its balance guarantee"
    return DecomposeOutcome("core", core=frozenset(core))


def _drive_below_half(g: Graph, alive, z, core: set, cfg: AlgoConfig, backend):
    """Grow `core` (in place) until no component of alive − N[core] holds
    more than half of z, or return a decomposition in which no particle
    holds more than 3/4 of z. Each round puts indicator weights on the
    current heavy component's share of z; the backend either splits it by a
    factor 0.99 (so seventy rounds force it below half) or yields the
    decomposition outcome."""
    prev = None
    for _ in range(70):
        rem = alive - closed_neighborhood(g, core, alive)
        heavy = [c for c in components(g, rem) if 2 * len(c & z) > len(z)]
        if not heavy:
            return None
        assert len(heavy) == 1, "two components each hold over half of the target set"
        xa = heavy[0] & z
        if prev is not None:
            assert 100 * len(xa) <= 99 * prev, \
                "backend core failed its contraction guarantee"
        prev = len(xa)
        weights = {v: (1 if v in xa else 0) for v in alive}
        out = backend.decompose(g, alive, weights, cfg)
        if out.kind == "esd":
            for p in particles(out.esd):
                assert 2 * len(p.members & xa) <= len(xa), \
                    "backend decomposition violates its particle bound"
            return out.esd
        assert out.core is not None, "backend returned neither core nor decomposition"
        core |= out.core
    raise BackendError("backend failed to halve the heavy component in 70 rounds")
