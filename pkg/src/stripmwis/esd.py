"""Extended strip decompositions: validation, particles, separators derived
from host separations, local cleaning, projections, and the ESDF text format.

A decomposition assigns every vertex of a base (sub)graph to exactly one
"location": a host vertex set, a host edge set (with two interface subsets),
or a host triangle set. Cross edges in the base graph are only allowed in a
handful of patterns around interfaces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Graph, closed_neighborhood, components

HostEdge = tuple[int, int]           # (x, y) with x < y
HostTriangle = tuple[int, int, int]  # (x, y, z) with x < y < z


class EsdfFormatError(ValueError):
    """Raised on malformed ESDF input."""


def _edge_key(x: int, y: int) -> HostEdge:
    return (x, y) if x < y else (y, x)


def _tri_key(x: int, y: int, z: int) -> HostTriangle:
    return tuple(sorted((x, y, z)))  # type: ignore[return-value]


@dataclass(frozen=True)
class ExtendedStripDecomposition:
    base: Graph
    alive: frozenset[int]
    host_vertices: frozenset[int]
    host_edges: frozenset[HostEdge]
    eta_vertex: dict  # host vertex -> frozenset of base vertices
    eta_edge: dict    # HostEdge -> frozenset
    eta_interface: dict  # (HostEdge, endpoint) -> frozenset
    eta_triangle: dict = field(default_factory=dict)  # HostTriangle -> frozenset (sparse)

    def __post_init__(self):
        # normalize: every vertex/edge keyed, empty triangle entries dropped
        ev = {x: frozenset(self.eta_vertex.get(x, ())) for x in self.host_vertices}
        ee = {e: frozenset(self.eta_edge.get(e, ())) for e in self.host_edges}
        ei = {}
        for (x, y) in self.host_edges:
            ei[((x, y), x)] = frozenset(self.eta_interface.get(((x, y), x), ()))
            ei[((x, y), y)] = frozenset(self.eta_interface.get(((x, y), y), ()))
        et = {k: frozenset(v) for k, v in self.eta_triangle.items() if v}
        object.__setattr__(self, "eta_vertex", ev)
        object.__setattr__(self, "eta_edge", ee)
        object.__setattr__(self, "eta_interface", ei)
        object.__setattr__(self, "eta_triangle", et)

    # -- host structure ----------------------------------------------------
    def host_neighbors(self, x: int) -> list[int]:
        return sorted(y for e in self.host_edges for y in e if x in e and y != x)

    def host_degree(self, x: int) -> int:
        return sum(1 for e in self.host_edges if x in e)

    def host_triangles(self) -> list[HostTriangle]:
        """All triangles of the host graph, sorted."""
        es = self.host_edges
        out = []
        for (x, y) in sorted(es):
            for z in sorted(self.host_vertices):
                if z > y and _edge_key(x, z) in es and _edge_key(y, z) in es:
                    out.append((x, y, z))
        return sorted(set(out))

    def tri_set(self, tri: HostTriangle) -> frozenset[int]:
        return self.eta_triangle.get(tri, frozenset())

    def interface(self, e: HostEdge, end: int) -> frozenset[int]:
        return self.eta_interface[(e, end)]

    def location_map(self) -> dict:
        """base vertex -> ('v', x) | ('e', edge) | ('t', triangle).

        Raises ValueError if some vertex appears in two sets; vertices of
        `alive` missing from every set are simply absent from the map.
        """
        loc: dict = {}
        def put(v, where):
            if v in loc:
                raise ValueError(f"vertex {v} in two sets: {loc[v]} and {where}")
            loc[v] = where
        for x in sorted(self.host_vertices):
            for v in self.eta_vertex[x]:
                put(v, ("v", x))
        for e in sorted(self.host_edges):
            for v in self.eta_edge[e]:
                put(v, ("e", e))
        for tri in sorted(self.eta_triangle):
            for v in self.eta_triangle[tri]:
                put(v, ("t", tri))
        return loc


def validate_esd(d: ExtendedStripDecomposition):
    """Return None if d is a valid decomposition, else a violation string."""
    for (x, y) in d.host_edges:
        if not (x in d.host_vertices and y in d.host_vertices):
            return f"host edge ({x},{y}) references undeclared host vertex"
        if x == y:
            return f"host self-loop at {x}"
    for tri in d.eta_triangle:
        x, y, z = tri
        if not (_edge_key(x, y) in d.host_edges
                and _edge_key(y, z) in d.host_edges
                and _edge_key(x, z) in d.host_edges):
            return f"triangle set on non-triangle {tri}"

    try:
        loc = d.location_map()
    except ValueError as exc:
        return f"partition violated: {exc}"
    covered = set(loc)
    if covered != set(d.alive):
        missing = sorted(set(d.alive) - covered)
        extra = sorted(covered - set(d.alive))
        if missing:
            return f"partition violated: vertex {missing[0]} in no set"
        return f"set contains non-alive vertex {extra[0]}"

    # interfaces contained in their edge sets
    for (e, end), iface in d.eta_interface.items():
        if not iface <= d.eta_edge[e]:
            bad = sorted(iface - d.eta_edge[e])[0]
            return f"interface vertex {bad} of edge {e} at {end} not in edge set"

    g = d.base
    # interface completeness at every host vertex
    for x in sorted(d.host_vertices):
        nbrs = d.host_neighbors(x)
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                a = d.interface(_edge_key(x, nbrs[i]), x)
                b = d.interface(_edge_key(x, nbrs[j]), x)
                for u in a:
                    for v in b:
                        if not g.has_edge(u, v):
                            return (f"interfaces at host vertex {x} not complete: "
                                    f"{u} (edge {_edge_key(x, nbrs[i])}) vs {v}")

    # edge legality
    for u in sorted(d.alive):
        for v in g.adj[u]:
            if v <= u or v not in d.alive:
                continue
            if loc[u] == loc[v]:
                continue
            if not _cross_edge_ok(d, loc, u, v):
                return f"illegal base edge ({u},{v}) across {loc[u]} and {loc[v]}"
    return None


def _cross_edge_ok(d: ExtendedStripDecomposition, loc, u: int, v: int) -> bool:
    for a, b in ((u, v), (v, u)):
        la, lb = loc[a], loc[b]
        if la[0] == "e" and lb[0] == "e":
            ea, eb = la[1], lb[1]
            shared = set(ea) & set(eb)
            if len(shared) == 1:
                x = shared.pop()
                if a in d.interface(ea, x) and b in d.interface(eb, x):
                    return True
        elif la[0] == "e" and lb[0] == "v":
            x = lb[1]
            if x in la[1] and a in d.interface(la[1], x):
                return True
        elif la[0] == "t" and lb[0] == "e":
            tri, e = la[1], lb[1]
            if set(e) <= set(tri):
                x, y = e
                if b in d.interface(e, x) and b in d.interface(e, y):
                    return True
    return False


def is_rigid(d: ExtendedStripDecomposition) -> bool:
    for e in d.host_edges:
        x, y = e
        if not d.eta_edge[e] or not d.interface(e, x) or not d.interface(e, y):
            return False
    for x in d.host_vertices:
        if d.host_degree(x) == 0 and not d.eta_vertex[x]:
            return False
    return True


# --------------------------------------------------------------------------
# Particles
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Particle:
    kind: str     # 'vertex' | 'edge-interior' | 'half-edge' | 'full-edge' | 'triangle'
    anchor: tuple  # (x,) | (edge,) | (edge, end) | (triangle,)
    members: frozenset[int]

    @property
    def key(self):
        return (self.kind, self.anchor)


def particles(d: ExtendedStripDecomposition) -> list[Particle]:
    """All particles of all five kinds (including empty ones), in a fixed order."""
    out = []
    for x in sorted(d.host_vertices):
        out.append(Particle("vertex", (x,), d.eta_vertex[x]))
    tris = d.host_triangles()
    for e in sorted(d.host_edges):
        x, y = e
        full = d.eta_edge[e]
        ix, iy = d.interface(e, x), d.interface(e, y)
        out.append(Particle("edge-interior", (e,), full - (ix | iy)))
        out.append(Particle("half-edge", (e, x), d.eta_vertex[x] | (full - iy)))
        out.append(Particle("half-edge", (e, y), d.eta_vertex[y] | (full - ix)))
        tri_union = frozenset().union(
            *[d.tri_set(t) for t in tris if x in t and y in t] or [frozenset()])
        out.append(Particle("full-edge", (e,),
                            d.eta_vertex[x] | d.eta_vertex[y] | full | tri_union))
    for t in tris:
        out.append(Particle("triangle", (t,), d.tri_set(t)))
    return out


def preimage(d: ExtendedStripDecomposition, a) -> frozenset[int]:
    """Base vertices mapped to host objects touching `a` (a set of host vertices)."""
    a = set(a)
    acc: set[int] = set()
    for x in a & set(d.host_vertices):
        acc |= d.eta_vertex[x]
    for e in d.host_edges:
        if a & set(e):
            acc |= d.eta_edge[e]
    for tri, s in d.eta_triangle.items():
        if len(a & set(tri)) >= 2:
            acc |= s
    return frozenset(acc)


# --------------------------------------------------------------------------
# Separators derived from the host
# --------------------------------------------------------------------------

def dom_potato(d: ExtendedStripDecomposition, x: int) -> frozenset[int]:
    """Two base vertices dominating the union of x's interfaces (needs deg >= 2).

    Picks the lowest vertex of the interfaces toward the two lowest-id host
    neighbors; completeness of interfaces makes the pair dominating.
    """
    nbrs = d.host_neighbors(x)
    if len(nbrs) < 2:
        raise ValueError(f"host vertex {x} has degree {len(nbrs)} < 2")
    picks = []
    for y in nbrs[:2]:
        iface = d.interface(_edge_key(x, y), x)
        if not iface:
            raise ValueError(f"empty interface at ({x},{y}); decomposition not rigid")
        picks.append(min(iface))
    return frozenset(picks)


@dataclass(frozen=True)
class Separation:
    a: frozenset[int]
    b: frozenset[int]

    def check(self, d: ExtendedStripDecomposition):
        if self.a | self.b != d.host_vertices:
            raise ValueError("separation sides do not cover the host")
        onlya, onlyb = self.a - self.b, self.b - self.a
        for (x, y) in d.host_edges:
            if (x in onlya and y in onlyb) or (x in onlyb and y in onlya):
                raise ValueError(f"host edge ({x},{y}) crosses the separation")

    @property
    def order(self) -> int:
        return len(self.a & self.b)


def separation_separator(d: ExtendedStripDecomposition, s: Separation) -> frozenset[int]:
    """Lift a host separation to a base separator: all interfaces at A∩B."""
    s.check(d)
    acc: set[int] = set()
    for x in s.a & s.b:
        for y in d.host_neighbors(x):
            acc |= d.interface(_edge_key(x, y), x)
    return frozenset(acc)


def classify_separated_components(d: ExtendedStripDecomposition, s: Separation):
    """Verifier for separation_separator: assign each component of base−X to
    one of the allowed containers; raises if some component fits none."""
    x_set = separation_separator(d, s)
    g = d.base
    containers = [preimage(d, s.a - s.b), preimage(d, s.b - s.a)]
    for hv in sorted(s.a & s.b):
        containers.append(d.eta_vertex[hv])
    for e in sorted(d.host_edges):
        if set(e) <= s.a:
            containers.append(d.eta_edge[e])
    for tri, ts in sorted(d.eta_triangle.items()):
        if len(set(tri) & s.a & s.b) >= 2:
            containers.append(ts)
    out = []
    for comp in components(g, d.alive - x_set):
        idx = next((i for i, c in enumerate(containers) if comp <= c), None)
        if idx is None:
            raise AssertionError(f"component {sorted(comp)} fits no allowed container")
        out.append((comp, idx))
    return out


def substantial_particle_separator(g: Graph, d: ExtendedStripDecomposition,
                                   delta: Fraction):
    """A small host set F whose interfaces form a (1−δ)w(G)-balanced separator.

    Requires: no particle heavier than (1−δ)·w(alive), but some particle of
    weight at least δ·w(alive). Every particle sits inside a maximal one (an
    isolated-vertex particle or a full-edge particle), so the search below
    only needs those two kinds.
    """
    if not (0 < delta < Fraction(1, 2)):
        raise ValueError("delta must be in (0, 1/2)")
    total = g.w(d.alive)
    parts = particles(d)
    heavy_exists = False
    for p in parts:
        pw = g.w(p.members)
        if pw > (1 - delta) * total:
            raise ValueError(f"particle {p.key} heavier than (1-delta)*w(G)")
        if pw >= delta * total:
            heavy_exists = True
    if not heavy_exists:
        raise ValueError("no particle of weight >= delta*w(G)")

    for x in sorted(d.host_vertices):
        if d.host_degree(x) == 0 and g.w(d.eta_vertex[x]) >= delta * total:
            # the heavy set is a union of base components; nothing to cut
            return frozenset(), frozenset()
    for e in sorted(d.host_edges):
        p = next(q for q in parts if q.kind == "full-edge" and q.anchor == (e,))
        if g.w(p.members) >= delta * total:
            f = frozenset(v for v in e if d.host_degree(v) > 1)
            acc: set[int] = set()
            for hv in f:
                for y in d.host_neighbors(hv):
                    acc |= d.interface(_edge_key(hv, y), hv)
            return f, frozenset(acc)
    raise AssertionError("no maximal particle reached delta despite precondition")


# --------------------------------------------------------------------------
# Restriction and local cleaning
# --------------------------------------------------------------------------

def restrict_esd(d: ExtendedStripDecomposition, s) -> ExtendedStripDecomposition:
    """Remove the base vertices in s from every set (same host)."""
    s = frozenset(s)
    return ExtendedStripDecomposition(
        base=d.base,
        alive=d.alive - s,
        host_vertices=d.host_vertices,
        host_edges=d.host_edges,
        eta_vertex={x: v - s for x, v in d.eta_vertex.items()},
        eta_edge={e: v - s for e, v in d.eta_edge.items()},
        eta_interface={k: v - s for k, v in d.eta_interface.items()},
        eta_triangle={t: v - s for t, v in d.eta_triangle.items()},
    )


def potential(d: ExtendedStripDecomposition) -> int:
    """Cleaning progress measure: strictly increases with every cleaning step."""
    in_vertex_sets = sum(len(v) for v in d.eta_vertex.values())
    not_isolated_empty = sum(
        1 for x in d.host_vertices
        if not (d.host_degree(x) == 0 and not d.eta_vertex[x]))
    return (in_vertex_sets - len(d.host_vertices) - len(d.host_edges)
            - not_isolated_empty)


class _MutableEsd:
    def __init__(self, d: ExtendedStripDecomposition):
        self.base = d.base
        self.alive = d.alive
        self.hv = set(d.host_vertices)
        self.he = set(d.host_edges)
        self.ev = {x: set(v) for x, v in d.eta_vertex.items()}
        self.ee = {e: set(v) for e, v in d.eta_edge.items()}
        self.ei = {k: set(v) for k, v in d.eta_interface.items()}
        self.et = {t: set(v) for t, v in d.eta_triangle.items()}

    def freeze(self) -> ExtendedStripDecomposition:
        return ExtendedStripDecomposition(
            base=self.base, alive=self.alive,
            host_vertices=frozenset(self.hv), host_edges=frozenset(self.he),
            eta_vertex={x: frozenset(v) for x, v in self.ev.items()},
            eta_edge={e: frozenset(v) for e, v in self.ee.items()},
            eta_interface={k: frozenset(v) for k, v in self.ei.items()},
            eta_triangle={t: frozenset(v) for t, v in self.et.items()},
        )

    def degree(self, x):
        return sum(1 for e in self.he if x in e)

    def neighbors(self, x):
        return sorted(y for e in self.he for y in e if x in e and y != x)

    def drop_edge(self, e):
        x, y = e
        for t in [t for t in self.et if x in t and y in t]:
            assert not self.et[t], "deleting a host edge with a nonempty triangle set"
            del self.et[t]
        self.he.discard(e)
        del self.ee[e]
        del self.ei[(e, x)]
        del self.ei[(e, y)]


def _step_remove_isolated_empty(m: _MutableEsd):
    for x in sorted(m.hv):
        if m.degree(x) == 0 and not m.ev[x]:
            m.hv.remove(x)
            del m.ev[x]
            return f"remove-isolated-empty {x}"
    return None


def _step_move_isolated_vertex_set(m: _MutableEsd):
    for x in sorted(m.hv):
        if m.degree(x) == 0 and m.ev[x]:
            for y in sorted(m.hv):
                if y != x and not (m.degree(y) == 0 and not m.ev[y]):
                    m.ev[y] |= m.ev[x]
                    m.ev[x] = set()
                    return f"move-isolated-vertex-set {x}->{y}"
    return None


def _step_move_edge_component(m: _MutableEsd):
    g = m.base
    for e in sorted(m.he):
        interior = m.ee[e] - (m.ei[(e, e[0])] | m.ei[(e, e[1])])
        for comp in components(g, interior):
            nbrs = closed_neighborhood(g, comp, m.alive) - comp
            for recv, other in (e, (e[1], e[0])):
                far = m.ei[(e, other)] - m.ei[(e, recv)]
                if not (nbrs & far):
                    m.ev[recv] |= comp
                    m.ee[e] -= comp
                    return f"move-edge-component {e}->{recv} ({len(comp)} vertices)"
    return None


def _step_move_triangle_component(m: _MutableEsd):
    g = m.base
    for t in sorted(m.et):
        if not m.et[t]:
            continue
        for comp in components(g, m.et[t]):
            nbrs = closed_neighborhood(g, comp, m.alive) - comp
            for recv in sorted(t):
                y, z = [v for v in t if v != recv]
                e = _edge_key(y, z)
                glue = m.ei[(e, y)] & m.ei[(e, z)]
                if not (nbrs & glue):
                    m.ev[recv] |= comp
                    m.et[t] -= comp
                    return f"move-triangle-component {t}->{recv}"
    return None


def _step_move_interface_vertex(m: _MutableEsd):
    g = m.base
    for e in sorted(m.he):
        for recv, other in (e, (e[1], e[0])):
            for v in sorted(m.ei[(e, recv)] - m.ei[(e, other)]):
                if (closed_neighborhood(g, {v}, m.alive) & m.ee[e]) <= m.ei[(e, recv)]:
                    m.ev[recv].add(v)
                    m.ee[e].discard(v)
                    m.ei[(e, recv)].discard(v)
                    return f"move-interface-vertex {v} ({e})->{recv}"
    return None


def _step_remove_empty_interface_edge(m: _MutableEsd):
    for e in sorted(m.he):
        for empty_end, recv in (e, (e[1], e[0])):
            if not m.ei[(e, empty_end)]:
                moved = set(m.ee[e])
                m.drop_edge(e)
                m.ev[recv] |= moved
                return f"remove-empty-interface-edge {e} (set -> {recv})"
    return None


def _step_suppress_degree_one(m: _MutableEsd):
    for x in sorted(m.hv):
        if m.degree(x) == 1:
            y = m.neighbors(x)[0]
            e = _edge_key(x, y)
            moved = set(m.ee[e]) | m.ev[x]
            m.drop_edge(e)
            m.ev[y] |= moved
            m.ev[x] = set()
            return f"suppress-degree-one {x} (into {y})"
    return None


_CLEANING_STEPS = (
    _step_remove_isolated_empty,
    _step_move_isolated_vertex_set,
    _step_move_edge_component,
    _step_move_triangle_component,
    _step_move_interface_vertex,
    _step_remove_empty_interface_edge,
    _step_suppress_degree_one,
)


def local_clean(g: Graph, d: ExtendedStripDecomposition,
                trace: list | None = None) -> ExtendedStripDecomposition:
    """Apply the first applicable cleaning step until none applies.

    The result is rigid, and the host is either a single vertex or has
    minimum degree >= 2. Each step must strictly increase `potential`; the
    iteration count is capped as an internal-error guard.
    """
    cur = d
    cap = (g.n + len(d.host_vertices) + len(d.host_edges)) * 4 + 8
    for _ in range(cap):
        m = _MutableEsd(cur)
        applied = None
        for step in _CLEANING_STEPS:
            applied = step(m)
            if applied is not None:
                break
        if applied is None:
            return cur
        nxt = m.freeze()
        if potential(nxt) <= potential(cur):
            raise AssertionError(f"cleaning step did not increase potential: {applied}")
        if trace is not None:
            trace.append((applied, nxt))
        cur = nxt
    raise AssertionError("local_clean exceeded its iteration cap")


def is_locally_cleaned_shape(d: ExtendedStripDecomposition) -> bool:
    """Rigid and (single host vertex or minimum host degree >= 2)."""
    if not is_rigid(d):
        return False
    if len(d.host_vertices) <= 1:
        return True
    return all(d.host_degree(x) >= 2 for x in d.host_vertices)


# --------------------------------------------------------------------------
# Projection
# --------------------------------------------------------------------------

def projection(g: Graph, v: int, d: ExtendedStripDecomposition) -> frozenset[int]:
    """Edge-set vertices reachable from v by paths internally avoiding all
    edge sets. d must be a decomposition of g with v (at least) removed."""
    if v in d.alive:
        raise ValueError(f"vertex {v} is still alive in the decomposition")
    edge_union: set[int] = set()
    for e in d.eta_edge:
        edge_union |= d.eta_edge[e]
    pi: set[int] = set()
    seen = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for nb in g.adj_set[u]:
            if nb == v or (nb not in d.alive):
                continue
            if nb in edge_union:
                pi.add(nb)
            elif nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return frozenset(pi)


# --------------------------------------------------------------------------
# ESDF text format
# --------------------------------------------------------------------------

def serialize_esdf(d: ExtendedStripDecomposition) -> str:
    """Canonical ESDF text. Interfaces are always written explicitly;
    empty vertex/triangle sets are omitted (undeclared means empty)."""
    lines = []
    for x in sorted(d.host_vertices):
        lines.append(f"hv {x}")
    for (x, y) in sorted(d.host_edges):
        lines.append(f"he {x} {y}")
    for t in sorted(d.eta_triangle):
        lines.append(f"ht {t[0]} {t[1]} {t[2]}")
    for x in sorted(d.host_vertices):
        if d.eta_vertex[x]:
            lines.append(f"ev {x}: " + " ".join(map(str, sorted(d.eta_vertex[x]))))
    for e in sorted(d.host_edges):
        x, y = e
        lines.append(f"ee {x} {y}: " + " ".join(map(str, sorted(d.eta_edge[e]))))
        lines.append(f"ix {x} {y} @ {x}: "
                     + " ".join(map(str, sorted(d.interface(e, x)))))
        lines.append(f"ix {x} {y} @ {y}: "
                     + " ".join(map(str, sorted(d.interface(e, y)))))
    for t in sorted(d.eta_triangle):
        lines.append(f"et {t[0]} {t[1]} {t[2]}: "
                     + " ".join(map(str, sorted(d.eta_triangle[t]))))
    return "\n".join(lines) + "\n"


def parse_esdf(text: str, base: Graph, alive=None) -> ExtendedStripDecomposition:
    hv: set[int] = set()
    he: set[HostEdge] = set()
    ht: set[HostTriangle] = set()
    ev: dict = {}
    ee: dict = {}
    ei: dict = {}
    et: dict = {}
    assigned: dict = {}

    def base_verts(tok, lineno, owner):
        out = []
        for s in tok:
            v = int(s)
            if not 0 <= v < base.n:
                raise EsdfFormatError(f"line {lineno}: base vertex {v} out of range")
            out.append(v)
        return out

    def assign(vs, owner, lineno):
        for v in vs:
            if v in assigned:
                raise EsdfFormatError(
                    f"line {lineno}: partition violated: vertex {v} in "
                    f"{assigned[v]} and {owner}")
            assigned[v] = owner

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" in line:
            head, _, tail = line.partition(":")
            head_tok = head.split()
            vals = tail.split()
        else:
            head_tok = line.split()
            vals = None
        kind = head_tok[0]
        if kind == "hv" and vals is None and len(head_tok) == 2:
            hv.add(int(head_tok[1]))
        elif kind == "he" and vals is None and len(head_tok) == 3:
            x, y = int(head_tok[1]), int(head_tok[2])
            if x not in hv or y not in hv:
                raise EsdfFormatError(f"line {lineno}: undeclared host vertex in edge")
            he.add(_edge_key(x, y))
        elif kind == "ht" and vals is None and len(head_tok) == 4:
            t = _tri_key(*map(int, head_tok[1:4]))
            for a, b in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2])):
                if _edge_key(a, b) not in he:
                    raise EsdfFormatError(
                        f"line {lineno}: triangle {t} missing host edge ({a},{b})")
            ht.add(t)
        elif kind == "ev" and vals is not None and len(head_tok) == 2:
            x = int(head_tok[1])
            if x not in hv:
                raise EsdfFormatError(f"line {lineno}: undeclared host vertex {x}")
            vs = base_verts(vals, lineno, f"ev {x}")
            assign(vs, f"ev {x}", lineno)
            ev.setdefault(x, set()).update(vs)
        elif kind == "ee" and vals is not None and len(head_tok) == 3:
            e = _edge_key(int(head_tok[1]), int(head_tok[2]))
            if e not in he:
                raise EsdfFormatError(f"line {lineno}: undeclared host edge {e}")
            vs = base_verts(vals, lineno, f"ee {e}")
            assign(vs, f"ee {e}", lineno)
            ee.setdefault(e, set()).update(vs)
        elif kind == "ix" and vals is not None and len(head_tok) == 5 and head_tok[3] == "@":
            e = _edge_key(int(head_tok[1]), int(head_tok[2]))
            end = int(head_tok[4])
            if e not in he:
                raise EsdfFormatError(f"line {lineno}: undeclared host edge {e}")
            if end not in e:
                raise EsdfFormatError(f"line {lineno}: interface endpoint {end} not on {e}")
            ei.setdefault((e, end), set()).update(base_verts(vals, lineno, "ix"))
        elif kind == "et" and vals is not None and len(head_tok) == 4:
            t = _tri_key(*map(int, head_tok[1:4]))
            if t not in ht:
                raise EsdfFormatError(f"line {lineno}: undeclared host triangle {t}")
            vs = base_verts(vals, lineno, f"et {t}")
            assign(vs, f"et {t}", lineno)
            et.setdefault(t, set()).update(vs)
        else:
            raise EsdfFormatError(f"line {lineno}: malformed line {line!r}")

    for (e, end), iface in ei.items():
        if not iface <= ee.get(e, set()):
            bad = sorted(iface - ee.get(e, set()))[0]
            raise EsdfFormatError(
                f"interface vertex {bad} of edge {e} at {end} not in its edge set")
    if alive is None:
        alive = frozenset(assigned)
    return ExtendedStripDecomposition(
        base=base, alive=frozenset(alive),
        host_vertices=frozenset(hv), host_edges=frozenset(he),
        eta_vertex=ev, eta_edge=ee, eta_interface=ei, eta_triangle=et)
