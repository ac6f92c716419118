"""Command-line tool: generate, solve, verify and bench.

Exit codes: 0 success, 1 infeasible input / decision "no" / invalid
solution, 2 usage (including a solver that does not support the instance),
3 file or format errors, 4 timeout without any feasible solution.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Optional, Sequence

from . import generators as gen
from .bench import run_benchmark
from .graph import Graph, InputError, Instance, Solution, verify_solution
from .io import (ParseError, ValidationError, format_instance, parse_config, parse_instance,
                 parse_solution, write_instance, write_solution)
from .matching import SizeGuardError
from .metrics import UndefinedMetricError, intersection_rate
from .planar import DegenerateGeometryError, rotation_system_from_coordinates
from .result import Status
from .solvers import solve
from .timing import default_time_limit_ms

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_IO, EXIT_TIMEOUT = 0, 1, 2, 3, 4

SOLVER_CHOICES = ("mwm", "mwhm", "generic", "apx", "brute", "auto", "tree", "deg2", "k4")
KINDS = ("rng", "face", "cycle", "walk", "cvc-c3", "cvc-planar", "cvc-deg", "cvc-bintree", "crown")


class _IOFailure(Exception):
    pass


def _read_instance(path: str):
    try:
        return parse_instance(path)
    except (OSError, UnicodeDecodeError, ParseError, ValidationError) as exc:
        raise _IOFailure(f"{path}: {exc}") from exc


def _cubic_graph(args) -> Graph:
    if args.graph:
        return gen.named_cubic_graph(args.graph)
    if args.input:
        return _read_instance(args.input)[0].graph
    raise InputError("cvc kinds need --graph NAME or --in FILE")


def _generate(args) -> tuple[Instance, Optional[list]]:
    kind = args.kind
    if kind == "crown":
        return gen.crowning_instance(args.p, args.q), None
    if kind.startswith("cvc-"):
        g = _cubic_graph(args)
        build = gen.CONSTRUCTIONS[kind[4:]]
        kw = {}
        if args.ell is not None:
            if kind == "cvc-bintree":
                kw["crown"] = True
            else:
                kw["ell"] = args.ell
        if kind == "cvc-deg" and args.mode:
            kw["mode"] = args.mode
        return build(g, p=args.p, **kw), None
    if args.input:
        inst, pts = _read_instance(args.input)
        g = inst.graph
    else:
        if args.n is None:
            raise InputError(f"--kind {kind} needs --n or --in")
        pts = gen.random_points(args.n, args.seed)
        g = gen.rng_graph(pts)
    if kind == "rng":
        return Instance(g, gen.assign_costs(g, args.seed), ()), pts
    if kind == "face":
        if pts is None:
            raise InputError("face habitats need coordinates")
        return gen.gen_face_instance(g, rotation_system_from_coordinates(g, pts), args.r, args.seed), pts
    if kind == "cycle":
        return gen.gen_cycle_instance(g, args.r, args.q, args.seed), pts
    return gen.gen_walk_instance(g, args.r, args.q, args.seed), pts


def cmd_generate(args) -> int:
    inst, pts = _generate(args)
    if args.out:
        write_instance(args.out, inst, pts)
    else:
        sys.stdout.write(format_instance(inst, pts))
    msg = f"generated {args.kind}: {inst.graph.vertex_count} vertices, {inst.graph.edge_count} edges, {len(inst.habitats)} habitats"
    if inst.budget is not None:
        msg += f", budget {inst.budget}"
    print(msg, file=sys.stderr)
    return EXIT_OK


def cmd_solve(args) -> int:
    inst, _ = _read_instance(args.input)
    limit = args.time_limit_ms if args.time_limit_ms is not None else default_time_limit_ms()
    try:
        res = solve(inst, args.solver, limit)
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    chosen = res.solver if args.solver == "auto" else args.solver
    print(f"solver: {chosen}")
    print(f"status: {res.status.value}")
    if res.message:
        print(f"message: {res.message}")
    if res.status is Status.UNSUPPORTED:
        return EXIT_USAGE
    if res.status is Status.INFEASIBLE_INPUT:
        return EXIT_NO
    if res.solution is None:
        return EXIT_TIMEOUT
    print(f"cost: {res.cost}")
    if res.lower_bound is not None and res.status is not Status.OPTIMAL:
        print(f"lower_bound: {res.lower_bound}")
    print(f"edges: {' '.join(map(str, res.solution.sorted_edges()))}")
    print(f"time_ms: {res.solve_time * 1000:.3f}")
    try:
        print(f"lambda: {intersection_rate(inst)}")
    except UndefinedMetricError:
        pass
    if args.solution_out:
        write_solution(args.solution_out, res.solution)
    if inst.budget is not None:
        verdict = res.decide(inst.budget)
        print(f"decision: {'unknown' if verdict is None else ('yes' if verdict else 'no')}")
        if verdict is False:
            return EXIT_NO
    return EXIT_OK


def cmd_verify(args) -> int:
    inst, _ = _read_instance(args.input)
    try:
        edges = parse_solution(args.solution)
    except (OSError, UnicodeDecodeError, ParseError) as exc:
        raise _IOFailure(f"{args.solution}: {exc}") from exc
    try:
        verdict = verify_solution(inst, Solution.from_edges(inst, edges))
    except InputError as exc:
        print(f"invalid solution: {exc}")
        return EXIT_NO
    print(f"feasible: {'yes' if verdict.feasible else 'no'}")
    print(f"cost: {inst.cost_of(edges)}")
    if inst.budget is not None:
        print(f"within_budget: {'yes' if verdict.within_budget else 'no'}")
    ok = verdict.feasible and (inst.budget is None or verdict.within_budget)
    return EXIT_OK if ok else EXIT_NO


def cmd_bench(args) -> int:
    try:
        cfg = parse_config(args.config)
    except (OSError, UnicodeDecodeError, ParseError) as exc:
        raise _IOFailure(f"{args.config}: {exc}") from exc
    rows = run_benchmark(cfg, args.out_csv, args.time_limit_ms, args.workers)
    print(f"wrote {rows} rows to {args.out_csv}")
    if args.figures_dir or args.plot_script:
        from .plotting import render_figures, write_plot_script
        if args.figures_dir:
            for path in render_figures(args.out_csv, args.figures_dir):
                print(f"figure: {path}")
        if args.plot_script:
            write_plot_script(args.plot_script, args.out_csv, args.figures_dir or "figures")
            print(f"plot script: {args.plot_script}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="greenbridges",
                                description="Reserve green bridge placement: generate, solve and benchmark instances.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a generated instance")
    g.add_argument("--kind", choices=KINDS, required=True)
    g.add_argument("--n", type=int, help="number of random points")
    g.add_argument("--r", type=int, default=10, help="number of habitats")
    g.add_argument("--q", type=int, default=5, help="target habitat size (cycle, walk) or crown length")
    g.add_argument("--p", type=int, default=0, help="vertex cover budget or crown base length")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--in", dest="input", help="reuse the graph (and coordinates) of an instance file")
    g.add_argument("--graph", help="named cubic graph for cvc kinds (k4, k33, prism, cube, petersen)")
    g.add_argument("--ell", type=int, help="cycle length for the cycle-only variant of a cvc construction (bintree: any value)")
    g.add_argument("--mode", choices=("crown", "subdivide"), help="cvc-deg variant used with --ell")
    g.add_argument("--out", help="output file (default: stdout)")
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("solve", help="solve an instance file")
    s.add_argument("--solver", choices=SOLVER_CHOICES, default="auto")
    s.add_argument("--time-limit-ms", type=int)
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--solution-out")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a solution file against an instance")
    v.add_argument("--in", dest="input", required=True)
    v.add_argument("--solution", required=True)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="run a benchmark grid")
    b.add_argument("--config", required=True)
    b.add_argument("--out-csv", required=True)
    b.add_argument("--plot-script", help="write a script that redraws the figures")
    b.add_argument("--figures-dir", help="render PNG figures into this directory")
    b.add_argument("--time-limit-ms", type=int)
    b.add_argument("--workers", type=int)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except _IOFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (InputError, DegenerateGeometryError, gen.GenerationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
