"""Exact MWIS by quasi-polynomial branching on subdivided-claw-free graphs.

The recursion keeps five parameters: the current subgraph, a core X whose
removal (with its neighborhood) admits a stored strip decomposition, a size
cap N, and two lists of separator cores F1/F2 that drive the branching rule.
Each call falls through a fixed ladder of cases; every structural promise a
case relies on is asserted at runtime, so a violated invariant aborts loudly
instead of silently returning a wrong weight.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field

from .esd import particles, validate_esd
from .graph import Graph, closed_neighborhood, components
from .oracles import mwis_brute
from .particle_solve import mwis_from_particles
from .separators import (AlgoConfig, GyarfasBackend, balanced_sep_or_esd,
                         esd_subroutine, ilog, infer_esd, is_branchable,
                         is_n_good, membership_counts, relevant)

LABELS = ("base", "success", "failure", "type1-esd", "bbs", "type2-esd", "bs")


@dataclass
class RecursionStats:
    counts: dict = field(default_factory=lambda: {lb: 0 for lb in LABELS})
    path_max: dict = field(default_factory=lambda: {lb: 0 for lb in LABELS})
    nodes: int = 0
    max_depth: int = 0
    fallbacks: int = 0


class IndSolver:
    def __init__(self, g: Graph, cfg: AlgoConfig, backend=None):
        self.g = g
        self.cfg = cfg
        self.backend = backend if backend is not None else GyarfasBackend()
        self.stats = RecursionStats()
        n = max(2, g.n)
        self.depth_limit = 4 * n * ilog(n) ** 2
        lg = ilog(n)
        ct = cfg.c_t
        # per-root-to-node-path edge budgets from the runtime analysis; only
        # meaningful with the full-size constants
        self._path_bounds = {
            "type1-esd": 64 * ct ** 2 * lg ** 3,
            "bbs": 5200 * ct ** 4 * lg ** 5,
            "type2-esd": 10 ** 7 * ct ** 7 * lg ** 9,
            "bs": 10 ** 9 * ct ** 8 * lg ** 11,
            "success": 10 ** 14 * ct ** 12 * lg ** 16,
        }
        self._cur_path = {lb: 0 for lb in LABELS}

    def solve(self, alive=None) -> int:
        if alive is None:
            alive = frozenset(range(self.g.n))
        alive = frozenset(alive)
        sys.setrecursionlimit(max(20000, 3 * self.depth_limit + 1000))
        return self._ind(alive, None, max(1, len(alive)), (), (), 0)

    # -- recursion ---------------------------------------------------------

    def _child(self, label: str, alive, xinfo, n_cap, f1, f2, depth) -> int:
        self.stats.counts[label] += 1
        cp = self._cur_path
        cp[label] += 1
        if cp[label] > self.stats.path_max[label]:
            self.stats.path_max[label] = cp[label]
        if label == "failure":
            assert cp["failure"] <= self.g.n, "more failure edges than vertices"
        if not self.cfg.test_mode and label in self._path_bounds:
            assert cp[label] <= self._path_bounds[label], \
                f"per-path budget exceeded for {label} edges"
        try:
            return self._ind(alive, xinfo, n_cap, f1, f2, depth)
        finally:
            cp[label] -= 1

    def _ind(self, alive: frozenset, xinfo, n_cap: int, f1, f2, depth: int) -> int:
        g, cfg = self.g, self.cfg
        st = self.stats
        st.nodes += 1
        if depth > st.max_depth:
            st.max_depth = depth
        assert len(alive) <= n_cap or n_cap == 1 and not alive

        if depth > self.depth_limit:
            # analysis says this cannot happen; keep exactness regardless
            st.fallbacks += 1
            return mwis_brute(g, alive, budget=len(alive))[0]

        if len(alive) <= 1:
            st.counts["base"] += 1
            st.path_max["base"] = max(st.path_max["base"], 1)
            return sum(g.weight[v] for v in alive)

        c1 = membership_counts(g, alive, f1)
        c2 = membership_counts(g, alive, f2)
        v = next((u for u in sorted(alive)
                  if is_branchable(g, alive, u, n_cap, f1, f2, c1, c2) is not None),
                 None)
        if v is not None:
            i_f = self._child("failure", alive - {v}, xinfo, n_cap, f1, f2, depth + 1)
            i_s = self._child("success", alive - closed_neighborhood(g, {v}, alive),
                              xinfo, n_cap, f1, f2, depth + 1)
            return max(i_f, i_s + g.weight[v])

        if xinfo is None:
            xinfo = esd_subroutine(g, alive, cfg, self.backend)
        x_set, base_d = xinfo

        d_inf = infer_esd(g, x_set, base_d, alive)
        assert validate_esd(d_inf) is None, "inferred decomposition is invalid"
        if is_n_good(d_inf, n_cap, cfg):
            vals = {}
            for p in particles(d_inf):
                assert len(p.members) < n_cap, "particle did not shrink the cap"
                vals[p.key] = self._child("type1-esd", p.members, None,
                                          max(1, len(p.members)), (), (), depth + 1)
            return mwis_from_particles(g, d_inf, vals)

        nx_set = closed_neighborhood(g, x_set, alive)
        den = cfg.big_denom(n_cap)
        if all(len(c) * den <= n_cap for c in components(g, alive - nx_set)):
            assert nx_set, "separator core has empty neighborhood in the subgraph"
            new_f1 = f1 + (x_set,)
            assert max(membership_counts(g, alive, new_f1).values()) <= ilog(n_cap), \
                "a vertex is covered by too many stored cores"
            return self._child("bbs", alive, None, n_cap, new_f1, (), depth + 1)

        a_set = relevant(g, alive, x_set, n_cap, cfg)
        assert a_set, "relevant set empty yet neither decomposition case fired"
        i = cfg.case_i(n_cap, len(alive))
        out = balanced_sep_or_esd(g, alive, a_set, i, cfg, self.backend)

        if out.kind == "esd":
            vals = {}
            for p in particles(out.esd):
                assert p.members < alive, "particle did not shrink the subgraph"
                vals[p.key] = self._child("type2-esd", p.members, xinfo,
                                          n_cap, f1, (), depth + 1)
            return mwis_from_particles(g, out.esd, vals)

        c_set = out.core
        assert closed_neighborhood(g, c_set, alive), \
            "separator core has empty neighborhood in the subgraph"
        new_f2 = f2 + (c_set,)
        assert max(membership_counts(g, alive, new_f2).values()) <= ilog(n_cap), \
            "a vertex is covered by too many stored cores"
        return self._child("bs", alive, xinfo, n_cap, f1, new_f2, depth + 1)


def ind_solve(g: Graph, cfg: AlgoConfig, backend=None,
              alive=None) -> tuple[int, RecursionStats]:
    """Weight of a maximum weight independent set of g (or of g[alive])."""
    solver = IndSolver(g, cfg, backend)
    value = solver.solve(alive)
    return value, solver.stats


def witness_by_self_reduction(g: Graph, solve_fn, alive=None) -> tuple[int, frozenset[int]]:
    """Turn any exact value oracle into a concrete optimum set.

    Standard self-reduction: a vertex belongs to some optimum iff deleting
    it lowers the value; keep such vertices (lowest id first) and drop their
    closed neighborhoods. About 2n oracle calls.
    """
    if alive is None:
        alive = frozenset(range(g.n))
    live = set(alive)
    total = solve_fn(frozenset(live))
    cur = total
    chosen: set[int] = set()
    for v in range(g.n):
        if v not in live:
            continue
        without = solve_fn(frozenset(live - {v}))
        assert without <= cur
        if without < cur:
            chosen.add(v)
            live -= g.adj_set[v] | {v}
            cur -= g.weight[v]
            assert solve_fn(frozenset(live)) == cur, "oracle is inconsistent"
        else:
            live.discard(v)
            cur = without
    assert cur == 0
    assert sum(g.weight[v] for v in chosen) == total
    for u in chosen:
        assert not (g.adj_set[u] & chosen), "witness set is not independent"
    return total, frozenset(chosen)
