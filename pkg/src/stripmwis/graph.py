"""Weighted undirected simple graphs over dense integer vertex ids.

Graphs are immutable after construction. Induced subgraphs are represented
as (graph, alive-set) pairs so that vertex identity stays stable across
recursive solvers; nothing in this package ever re-indexes vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

# Total weight must fit a signed 64-bit accumulator.
MAX_TOTAL_WEIGHT = 1 << 62


class GraphFormatError(ValueError):
    """Raised on malformed graph text input."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]          # sorted neighbor lists
    weight: tuple[int, ...]                   # nonnegative, sum < 2**62
    adj_set: tuple[frozenset[int], ...] = field(repr=False, compare=False, default=())

    @staticmethod
    def build(n: int, edges, weights=None) -> "Graph":
        if n < 0:
            raise ValueError("negative vertex count")
        if weights is None:
            weights = [1] * n
        weights = list(weights)
        if len(weights) != n:
            raise ValueError("weight list length mismatch")
        if any(w < 0 for w in weights):
            raise ValueError("negative weight")
        if sum(weights) >= MAX_TOTAL_WEIGHT:
            raise ValueError("weight overflow")
        nbr: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"out-of-range vertex id in edge ({u}, {v})")
            if v in nbr[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            nbr[u].add(v)
            nbr[v].add(u)
        adj = tuple(tuple(sorted(s)) for s in nbr)
        return Graph(n, adj, tuple(weights), tuple(frozenset(s) for s in nbr))

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj_set[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj_set[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def w(self, vs) -> int:
        return sum(self.weight[v] for v in vs)

    def with_weights(self, weights) -> "Graph":
        return Graph.build(self.n, self.edges, weights)


def components(g: Graph, alive) -> list[frozenset[int]]:
    """Connected components of the subgraph induced by `alive`.

    Each component is a frozenset; the list is ordered by smallest member.
    """
    alive = set(alive)
    out = []
    seen: set[int] = set()
    for start in sorted(alive):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for v in g.adj_set[u]:
                if v in alive and v not in comp:
                    comp.add(v)
                    stack.append(v)
        seen |= comp
        out.append(frozenset(comp))
    return out


def closed_neighborhood(g: Graph, s, within) -> frozenset[int]:
    """(s ∪ N(s)) ∩ within."""
    within = frozenset(within)
    acc = set(s)
    for v in s:
        acc |= g.adj_set[v]
    return frozenset(acc) & within


def parse_graph(text: str) -> Graph:
    """Parse the Graph Text Format.

    Lines: `p <n> <m>` header, optional `w <v> <weight>`, `m` lines
    `e <u> <v>` with u < v. '#' starts a comment.
    """
    n = m = None
    weights: dict[int, int] = {}
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if n is None:
            if tok[0] != "p" or len(tok) != 3:
                raise GraphFormatError(f"line {lineno}: missing header")
            try:
                n, m = int(tok[1]), int(tok[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: malformed header") from None
            if n < 0 or m < 0:
                raise GraphFormatError(f"line {lineno}: malformed header")
            continue
        if tok[0] == "w":
            if len(tok) != 3:
                raise GraphFormatError(f"line {lineno}: malformed weight line")
            v, wt = int(tok[1]), int(tok[2])
            if not 0 <= v < n:
                raise GraphFormatError(f"line {lineno}: out-of-range vertex id {v}")
            if wt < 0:
                raise GraphFormatError(f"line {lineno}: negative weight")
            if v in weights:
                raise GraphFormatError(f"line {lineno}: duplicate weight for {v}")
            weights[v] = wt
        elif tok[0] == "e":
            if len(tok) != 3:
                raise GraphFormatError(f"line {lineno}: malformed edge line")
            u, v = int(tok[1]), int(tok[2])
            if u == v:
                raise GraphFormatError(f"line {lineno}: self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"line {lineno}: out-of-range vertex id")
            if u > v:
                raise GraphFormatError(f"line {lineno}: edge endpoints not increasing")
            edges.append((u, v))
        else:
            raise GraphFormatError(f"line {lineno}: unknown line type {tok[0]!r}")
    if n is None:
        raise GraphFormatError("missing header")
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    if len(set(edges)) != len(edges):
        dup = sorted(e for e in set(edges) if edges.count(e) > 1)[0]
        raise GraphFormatError(f"duplicate edge {dup}")
    wlist = [weights.get(v, 1) for v in range(n)]
    if sum(wlist) >= MAX_TOTAL_WEIGHT:
        raise GraphFormatError("weight overflow")
    try:
        return Graph.build(n, edges, wlist)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def serialize_graph(g: Graph) -> str:
    """Canonical Graph Text Format; parse(serialize(g)) == g bit-exactly."""
    es = g.edges
    lines = [f"p {g.n} {len(es)}"]
    lines += [f"w {v} {g.weight[v]}" for v in range(g.n) if g.weight[v] != 1]
    lines += [f"e {u} {v}" for u, v in es]
    return "\n".join(lines) + "\n"
