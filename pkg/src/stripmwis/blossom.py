"""Maximum weight matching on general graphs (non-perfect variant).

Backed by networkx's blossom implementation; negative-weight edges are
dropped up front since they can never help a maximum weight matching.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx


@dataclass(frozen=True)
class WeightedMatchingInstance:
    n: int
    edges: tuple[tuple[int, int, int], ...]  # (u, v, weight), weight may be negative

    def __post_init__(self):
        seen = set()
        for u, v, _ in self.edges:
            if u == v or not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"bad edge ({u}, {v})")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)


def max_weight_matching(inst: WeightedMatchingInstance) -> tuple[int, set[tuple[int, int]]]:
    """Matching of maximum total weight (possibly empty); value is always >= 0."""
    h = nx.Graph()
    h.add_nodes_from(range(inst.n))
    wmap = {}
    for idx, (u, v, w) in enumerate(inst.edges):
        if w < 0:
            continue
        h.add_edge(u, v, weight=w)
        wmap[(min(u, v), max(u, v))] = w
    mate = nx.max_weight_matching(h, maxcardinality=False)
    chosen = {(min(u, v), max(u, v)) for u, v in mate}
    # networkx may keep zero-weight edges in the matching; they're harmless
    value = sum(wmap[e] for e in chosen)
    ends = [x for e in chosen for x in e]
    assert len(ends) == len(set(ends)), "matching shares an endpoint"
    return value, chosen
