"""Command-line front end.

Results go to stdout as stable machine-parseable lines; diagnostics and the
resolved configuration echo go to stderr. Exit codes: 0 success, 1
verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
import time

from .esd import (EsdfFormatError, local_clean, parse_esdf, particles,
                  serialize_esdf, validate_esd)
from .graph import (GraphFormatError, closed_neighborhood, components,
                    parse_graph, serialize_graph)
from .ind import ind_solve, IndSolver, LABELS, witness_by_self_reduction
from .instances import GeneratorSpec, build_instance
from .oracles import BudgetExceeded, find_induced_sttt, mwis_brute
from .separators import AlgoConfig, gyarfas_path, make_backend


def _echo_config(args):
    for key in sorted(vars(args)):
        if key == "func":
            continue
        print(f"config {key}={getattr(args, key)}", file=sys.stderr)


def _read_graph(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    if args.test_mode:
        print("test-mode thresholds active")
    if args.algo == "brute":
        value, witness = mwis_brute(g)
        print(f"value {value}")
        if args.witness:
            print("witness " + " ".join(map(str, sorted(witness))))
        return 0
    if args.algo == "particle":
        if not args.esd:
            print("error: --algo particle requires --esd", file=sys.stderr)
            return 2
        from .particle_solve import mwis_from_particles
        with open(args.esd, encoding="utf-8") as fh:
            d = parse_esdf(fh.read(), g)
        err = validate_esd(d)
        if err is not None:
            print(f"invalid {err}")
            return 1
        vals = {p.key: mwis_brute(g, p.members)[0] for p in particles(d)}
        print(f"value {mwis_from_particles(g, d, vals)}")
        return 0

    cfg = AlgoConfig(t=args.t, c_t=args.ct, test_mode=args.test_mode)
    backend = make_backend(args.backend)
    value, stats = ind_solve(g, cfg, backend)
    print(f"value {value}")
    for lb in LABELS:
        print(f"stat {lb}={stats.counts[lb]}")
    print(f"stat nodes={stats.nodes}")
    print(f"stat fallbacks={stats.fallbacks}")
    for lb in LABELS:
        print(f"path_max {lb}={stats.path_max[lb]}")
    if args.witness:
        def oracle(alive):
            solver = IndSolver(g, AlgoConfig(t=args.t, c_t=args.ct,
                                             test_mode=args.test_mode),
                               make_backend(args.backend))
            return solver.solve(alive)
        _, wit = witness_by_self_reduction(g, oracle)
        print("witness " + " ".join(map(str, sorted(wit))))
    for w in cfg.warnings:
        print(f"warn {w}", file=sys.stderr)
    return 0


def _cmd_validate_esd(args) -> int:
    g = _read_graph(args.graph)
    with open(args.esdf, encoding="utf-8") as fh:
        d = parse_esdf(fh.read(), g)
    err = validate_esd(d)
    if err is None:
        print("ok")
        return 0
    print(err)
    return 1


def _cmd_clean_esd(args) -> int:
    g = _read_graph(args.graph)
    with open(args.esdf, encoding="utf-8") as fh:
        d = parse_esdf(fh.read(), g)
    err = validate_esd(d)
    if err is not None:
        print(err)
        return 1
    sys.stdout.write(serialize_esdf(local_clean(g, d)))
    return 0


def _cmd_gyarfas(args) -> int:
    g = _read_graph(args.graph)
    alive = frozenset(range(g.n))
    q = gyarfas_path(g, alive)
    print("path " + " ".join(map(str, q)))
    total = g.w(alive)
    rem = alive - closed_neighborhood(g, q, alive)
    worst = max((g.w(c) for c in components(g, rem)), default=0)
    print(f"ok max_component_weight={worst} half_total={total}/2")
    return 0


def _cmd_detect_sttt(args) -> int:
    g = _read_graph(args.graph)
    try:
        emb = find_induced_sttt(g, args.t)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if emb is None:
        print("none")
    else:
        print(f"center {emb.center}")
        for leg in emb.legs:
            print("leg " + " ".join(map(str, leg)))
    return 0


def _spec_from_args(args) -> GeneratorSpec:
    wlo, whi = map(int, args.weights.split(":"))
    return GeneratorSpec(kind=args.kind, n=args.n, p=args.p, t=args.t,
                         seed=args.seed, wlo=wlo, whi=whi)


def _cmd_gen(args) -> int:
    g, d = build_instance(_spec_from_args(args))
    sys.stdout.write(serialize_graph(g))
    if args.esd_out and d is not None:
        with open(args.esd_out, "w", encoding="utf-8") as fh:
            fh.write(serialize_esdf(d))
    return 0


def _cmd_bench(args) -> int:
    cfg_kwargs = dict(t=args.t, c_t=args.ct, test_mode=args.test_mode)
    for i in range(args.count):
        spec = GeneratorSpec(kind=args.kind, n=args.n, p=args.p, t=args.t,
                             seed=args.seed + i)
        g, _ = build_instance(spec)
        t0 = time.perf_counter()
        value, stats = ind_solve(g, AlgoConfig(**cfg_kwargs),
                                 make_backend(args.backend))
        dt = time.perf_counter() - t0
        print(f"bench i={i} n={g.n} value={value} nodes={stats.nodes} "
              f"seconds={dt:.3f}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="stripmwis")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve")
    p.add_argument("--algo", choices=["ind", "brute", "particle"], required=True)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--ct", type=int, default=None)
    p.add_argument("--backend", default="gyarfas")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--test-mode", action="store_true")
    p.add_argument("--esd", default=None)
    p.add_argument("--jobs", type=int, default=1)  # accepted; solves sequentially
    p.add_argument("graph")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("validate-esd")
    p.add_argument("graph")
    p.add_argument("esdf")
    p.set_defaults(func=_cmd_validate_esd)

    p = sub.add_parser("clean-esd")
    p.add_argument("graph")
    p.add_argument("esdf")
    p.set_defaults(func=_cmd_clean_esd)

    p = sub.add_parser("gyarfas")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_gyarfas)

    p = sub.add_parser("detect-sttt")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("graph")
    p.set_defaults(func=_cmd_detect_sttt)

    for name in ("gen", "bench"):
        p = sub.add_parser(name)
        p.add_argument("--kind", required=True,
                       choices=["line-graph", "random-sttt-free", "cograph", "random"])
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--p", type=float, default=0.5)
        p.add_argument("--t", type=int, default=2)
        p.add_argument("--seed", type=int, default=0)
        if name == "gen":
            p.add_argument("--weights", default="1:1")
            p.add_argument("--esd-out", default=None)
            p.set_defaults(func=_cmd_gen)
        else:
            p.add_argument("--count", type=int, default=5)
            p.add_argument("--ct", type=int, default=None)
            p.add_argument("--backend", default="gyarfas")
            p.add_argument("--test-mode", action="store_true")
            p.set_defaults(func=_cmd_bench)
    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    _echo_config(args)
    try:
        return args.func(args)
    except (GraphFormatError, EsdfFormatError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
