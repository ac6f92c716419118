"""Benchmark grid runner writing one CSV row per (instance, solver)."""

from __future__ import annotations

import csv
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .generators import (GenerationError, gen_cycle_instance, gen_face_instance,
                         gen_walk_instance, random_points, rng_graph)
from .graph import Graph, Instance
from .io import BenchConfig, parse_instance
from .matching import SizeGuardError
from .metrics import (UndefinedMetricError, average_edge_cost, compute_ratios,
                      format_fraction, intersection_rate)
from .planar import Face, enumerate_faces, rotation_system_from_coordinates
from .result import SolveResult, Status
from .solvers import solve
from .timing import default_time_limit_ms

log = logging.getLogger(__name__)

CSV_HEADER = (
    "instance_id", "graph", "habitat_type", "r", "q", "seed", "solver", "status",
    "cost", "lower_bound", "wall_time_ms", "build_time_ms", "lambda",
    "quality_ratio", "additive_ratio",
)

EXACT_SOLVERS = frozenset({"mwm", "mwhm", "generic", "brute", "tree", "deg2", "k4", "auto"})


@dataclass(frozen=True)
class Cell:
    """One generated instance of the grid; every solver runs on it."""
    graph: str
    habitat_type: str
    r: int
    q: Optional[int]
    seed: int

    @property
    def instance_id(self) -> str:
        q = "" if self.q is None else f"-q{self.q}"
        return f"{self.graph}-{self.habitat_type}-r{self.r}{q}-s{self.seed}"


def load_graph(source: str) -> tuple[Graph, Sequence[tuple[float, float]]]:
    """``rng:<n>[:<seed>]`` for a random relative neighbourhood graph, otherwise
    a path to an instance file with coordinates."""
    if source.startswith("rng:"):
        parts = source.split(":")
        n = int(parts[1])
        seed = int(parts[2]) if len(parts) > 2 else 0
        pts = random_points(n, seed)
        return rng_graph(pts), pts
    inst, coords = parse_instance(source)
    if coords is None:
        raise GenerationError(f"{source}: graph file has no coordinates")
    return inst.graph, coords


def cells(cfg: BenchConfig) -> Iterator[Cell]:
    for graph in cfg.graphs:
        for kind in cfg.types:
            for r in cfg.r:
                for q in ([None] if kind == "face" else cfg.q):
                    for seed in cfg.seeds:
                        yield Cell(graph, kind, r, q, seed)


def make_instance(cell: Cell, g: Graph, faces: Optional[Sequence[Face]]) -> Instance:
    if cell.habitat_type == "face":
        return gen_face_instance(g, faces, cell.r, cell.seed)
    if cell.habitat_type == "cycle":
        return gen_cycle_instance(g, cell.r, cell.q, cell.seed)
    return gen_walk_instance(g, cell.r, cell.q, cell.seed)


def _num(x: Optional[float]) -> str:
    return "" if x is None else f"{x:.3f}"


def _row(cell: Cell, res: SolveResult, lam: Optional[Fraction]) -> dict:
    return {
        "instance_id": cell.instance_id, "graph": cell.graph, "habitat_type": cell.habitat_type,
        "r": cell.r, "q": "" if cell.q is None else cell.q, "seed": cell.seed,
        "solver": res.solver, "status": res.status.value,
        "cost": "" if res.cost is None else res.cost,
        "lower_bound": "" if res.lower_bound is None else res.lower_bound,
        "wall_time_ms": _num(res.solve_time * 1000), "build_time_ms": _num(res.build_time * 1000),
        "lambda": format_fraction(lam), "quality_ratio": "", "additive_ratio": "",
    }


def _add_ratios(rows: list[dict], results: list[SolveResult], r: int) -> None:
    ref = next((res for res in results
                if res.status is Status.OPTIMAL and res.solution is not None and res.solver in EXACT_SOLVERS), None)
    if ref is None or ref.cost == 0:
        return
    d = average_edge_cost(ref.cost, len(ref.solution.edge_indices))
    for row, res in zip(rows, results):
        if res.cost is None:
            continue
        q, a = compute_ratios(res.cost, ref.cost, r, d)
        row["quality_ratio"] = format_fraction(q)
        row["additive_ratio"] = format_fraction(a)


def run_cell(cell: Cell, solvers: Sequence[str], time_limit_ms: float,
             graph: Optional[tuple[Graph, list[Face]]] = None) -> list[dict]:
    if graph is None:
        g, pts = load_graph(cell.graph)
        faces = enumerate_faces(g, rotation_system_from_coordinates(g, pts)) if cell.habitat_type == "face" else None
    else:
        g, faces = graph
    try:
        inst = make_instance(cell, g, faces)
    except GenerationError as exc:
        log.warning("%s: %s", cell.instance_id, exc)
        return []
    try:
        lam = intersection_rate(inst)
    except UndefinedMetricError:
        lam = None
    results = []
    for name in solvers:
        try:
            res = solve(inst, name, time_limit_ms)
        except SizeGuardError as exc:
            res = SolveResult(None, Status.UNSUPPORTED, 0.0, solver=name, message=str(exc))
        res.solver = name
        results.append(res)
    rows = [_row(cell, res, lam) for res in results]
    _add_ratios(rows, results, cell.r)
    return rows


def _run_cell_job(args) -> list[dict]:
    return run_cell(*args)


def run_benchmark(cfg: BenchConfig, out_csv: str, time_limit_ms: Optional[float] = None,
                  workers: Optional[int] = None) -> int:
    """Run the grid and write the CSV; returns the number of rows.

    Rows are written in grid order (graph, type, r, q, seed, solver) and
    flushed after every instance, so an interrupted run leaves a valid prefix.
    """
    limit = time_limit_ms if time_limit_ms is not None else (cfg.time_limit_ms or default_time_limit_ms())
    workers = workers or cfg.workers
    grid = list(cells(cfg))
    count = 0
    with open(out_csv, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_HEADER, lineterminator="\r\n")
        writer.writeheader()
        fh.flush()
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                jobs = ((c, tuple(cfg.solvers), limit) for c in grid)
                # map yields in submission order, which keeps the output deterministic
                for rows in pool.map(_run_cell_job, jobs):
                    writer.writerows(rows)
                    fh.flush()
                    count += len(rows)
            return count
        cache: dict[str, tuple[Graph, Optional[list[Face]]]] = {}
        for c in grid:
            if c.graph not in cache:
                g, pts = load_graph(c.graph)
                faces = None
                if "face" in cfg.types:
                    faces = enumerate_faces(g, rotation_system_from_coordinates(g, pts))
                cache[c.graph] = (g, faces)
            rows = run_cell(c, cfg.solvers, limit, cache[c.graph])
            writer.writerows(rows)
            fh.flush()
            os.fsync(fh.fileno())
            count += len(rows)
    return count


def read_rows(path: str) -> list[dict]:
    with open(path, newline="", encoding="utf-8") as fh:
        rd = csv.DictReader(fh)
        if tuple(rd.fieldnames or ()) != CSV_HEADER:
            raise ValueError(f"{path}: unexpected CSV header {rd.fieldnames}")
        return list(rd)
