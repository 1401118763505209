"""Exponential-time ground-truth oracles.

These are deliberately simple and independent of the polynomial machinery;
every nontrivial component of the package is validated against them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


class BudgetExceeded(Exception):
    """Input larger than the configured brute-force budget."""


def mwis_brute(g: Graph, alive=None, budget: int = 26) -> tuple[int, frozenset[int]]:
    """Maximum-weight independent set of the subgraph induced by `alive`.

    Ties are broken by the lexicographically smallest vertex set (as a
    sorted tuple), so outputs are deterministic golden values.
    """
    if alive is None:
        alive = range(g.n)
    verts = sorted(alive)
    if len(verts) > budget:
        raise BudgetExceeded(f"mwis_brute: {len(verts)} vertices > budget {budget}")

    best_w = 0
    best_set: tuple[int, ...] = ()
    order = verts
    # suffix[i] = total weight of order[i:], for pruning
    suffix = [0] * (len(order) + 1)
    for i in range(len(order) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + g.weight[order[i]]

    def rec(i: int, cur_w: int, cur: list[int], banned: set[int]):
        nonlocal best_w, best_set
        while i < len(order) and order[i] in banned:
            i += 1
        if cur_w + suffix[i] < best_w:
            return
        if i == len(order):
            if cur_w > best_w or (cur_w == best_w and tuple(cur) < best_set):
                best_w = cur_w
                best_set = tuple(cur)
            return
        v = order[i]
        # include v first: the first optimum found contains the smallest
        # eligible vertices, matching the lexicographic tie-break
        newly = g.adj_set[v] - banned
        cur.append(v)
        rec(i + 1, cur_w + g.weight[v], cur, banned | newly)
        cur.pop()
        rec(i + 1, cur_w, cur, banned)

    rec(0, 0, [], set())
    return best_w, frozenset(best_set)


def mwm_brute(g: Graph, edge_weights: dict) -> tuple[int, set[tuple[int, int]]]:
    """Maximum-weight matching by exhaustive search; |V| <= 12.

    `edge_weights` maps (u, v) with u < v to a (possibly negative) integer.
    Negative edges are never selected.
    """
    if g.n > 12:
        raise BudgetExceeded(f"mwm_brute: {g.n} vertices > 12")
    edges = [(u, v, w) for (u, v), w in sorted(edge_weights.items()) if w > 0]
    for (u, v) in edge_weights:
        if not (0 <= u < v < g.n) or not g.has_edge(u, v):
            raise ValueError(f"edge weight for non-edge ({u}, {v})")

    best = (0, frozenset())

    def rec(i: int, used: int, cur_w: int, cur: frozenset):
        nonlocal best
        if cur_w > best[0]:
            best = (cur_w, cur)
        for k in range(i, len(edges)):
            u, v, w = edges[k]
            if used & (1 << u) or used & (1 << v):
                continue
            rec(k + 1, used | (1 << u) | (1 << v), cur_w + w, cur | {(u, v)})

    rec(0, 0, 0, frozenset())
    return best[0], set(best[1])


@dataclass(frozen=True)
class StttEmbedding:
    """An induced subdivided claw: a center plus three t-vertex legs."""
    center: int
    legs: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]


def verify_sttt(g: Graph, emb: StttEmbedding, t: int) -> bool:
    """Re-check every adjacency condition of an embedding directly against g."""
    c = emb.center
    allv = [c]
    for leg in emb.legs:
        if len(leg) != t:
            return False
        allv.extend(leg)
    if len(set(allv)) != 3 * t + 1:
        return False
    for leg in emb.legs:
        # center sees exactly the first vertex of each leg
        if not g.has_edge(c, leg[0]):
            return False
        for u in leg[1:]:
            if g.has_edge(c, u):
                return False
        # the leg induces a path
        for i in range(len(leg)):
            for j in range(i + 1, len(leg)):
                adj = g.has_edge(leg[i], leg[j])
                if adj != (j == i + 1):
                    return False
    # legs pairwise anti-complete
    for a in range(3):
        for b in range(a + 1, 3):
            for u in emb.legs[a]:
                for v in emb.legs[b]:
                    if g.has_edge(u, v):
                        return False
    return True


def find_induced_sttt(g: Graph, t: int, max_n: int = 40):
    """Find an induced S_{t,t,t} (subdivided claw) or return None.

    DFS over (center, partial legs) with pruning: every leg vertex after the
    first must avoid N[center], and whole legs must avoid N[earlier legs].
    Exhaustive within the budget; raises BudgetExceeded above it.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if g.n > max_n:
        raise BudgetExceeded(f"find_induced_sttt: {g.n} vertices > budget {max_n}")

    for c in range(g.n):
        if g.degree(c) < 3:
            continue
        emb = _grow_legs(g, t, c, (), ())
        if emb is not None:
            assert verify_sttt(g, emb, t)
            return emb
    return None


def _grow_legs(g: Graph, t: int, c: int, done_legs, cur_leg):
    if len(cur_leg) == t:
        done_legs = done_legs + (cur_leg,)
        cur_leg = ()
        if len(done_legs) == 3:
            return StttEmbedding(c, done_legs)

    blocked = set()
    for leg in done_legs:
        for u in leg:
            blocked.add(u)
            blocked |= g.adj_set[u]
    blocked.add(c)
    for u in cur_leg:
        blocked.add(u)

    if not cur_leg:
        cands = g.adj_set[c] - blocked
    else:
        # extend: adjacent to leg end, not to center, induced within the leg
        cands = g.adj_set[cur_leg[-1]] - blocked - g.adj_set[c]
        for u in cur_leg[:-1]:
            cands -= g.adj_set[u]
    for v in sorted(cands):
        res = _grow_legs(g, t, c, done_legs, cur_leg + (v,))
        if res is not None:
            return res
    return None


def find_induced_sttt_naive(g: Graph, t: int):
    """Independent exhaustive enumerator (no pruning) for cross-checking.

    Enumerates every center and every ordered choice of three legs built
    vertex by vertex over all permutations. Only viable for tiny inputs.
    """
    from itertools import permutations

    verts = list(range(g.n))
    for c in verts:
        rest = [v for v in verts if v != c]
        for combo in permutations(rest, 3 * t):
            legs = (combo[:t], combo[t:2 * t], combo[2 * t:])
            # canonical order between legs to cut the factor-6 duplication
            if not (legs[0][0] < legs[1][0] < legs[2][0]):
                continue
            emb = StttEmbedding(c, legs)
            if verify_sttt(g, emb, t):
                return emb
    return None
