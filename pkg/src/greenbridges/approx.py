"""Union of per-habitat minimum spanning trees."""

from __future__ import annotations

import time
from typing import Iterable, Sequence

from .graph import Graph, Instance, Solution
from .result import SolveResult, Status


class DisconnectedHabitatError(ValueError):
    pass


def _kruskal(g: Graph, costs: Sequence[int], hs: frozenset[int], edges: Iterable[int]) -> list[int]:
    parent = {v: v for v in hs}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree = []
    for k in sorted(edges, key=lambda k: (costs[k], k)):
        a, b = (find(x) for x in g.edges[k])
        if a != b:
            parent[a] = b
            tree.append(k)
            if len(tree) == len(hs) - 1:
                break
    if len(tree) != len(hs) - 1:
        raise DisconnectedHabitatError("habitat does not induce a connected subgraph")
    return sorted(tree)


def mst_on_induced(g: Graph, costs: Sequence[int], h: Iterable[int]) -> list[int]:
    """Kruskal on G[h]; equal costs are taken in edge-index order."""
    hs = frozenset(h)
    return _kruskal(g, costs, hs, g.induced_edges(hs))


def apx_edges(inst: Instance, habitat_ids: Iterable[int] | None = None) -> set[int]:
    ids = range(len(inst.habitats)) if habitat_ids is None else habitat_ids
    out: set[int] = set()
    for i in ids:
        out.update(_kruskal(inst.graph, inst.costs, inst.habitats[i], inst.habitat_edges[i]))
    return out


def solve_apx(inst: Instance) -> SolveResult:
    """Feasible solution from spanning trees; for cycle habitats its cost is
    at most OPT + r * max edge cost."""
    t0 = time.perf_counter()
    try:
        edges = apx_edges(inst)
    except DisconnectedHabitatError as exc:
        return SolveResult.failed(Status.INFEASIBLE_INPUT, t0, "apx", str(exc))
    sol = Solution.from_edges(inst, edges)
    return SolveResult(sol, Status.HEURISTIC, time.perf_counter() - t0, solver="apx")
