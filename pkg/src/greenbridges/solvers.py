"""Problem-level solvers.

Every solver takes an ``Instance`` and returns a ``SolveResult``. Edges in
no habitat are never part of a returned solution: costs are positive and
such edges cannot help any habitat.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

import networkx as nx
import numpy as np
from scipy.optimize import linprog

from .approx import apx_edges, solve_apx
from .graph import (Graph, HabitatKind, InputError, Instance, IntegrityError,
                    Solution, classify_habitat, habitat_components)
from .habitat_graph import (HabitatShapeError, build_habitat_graph, covered_cost,
                            matching_to_solution, max_hyperedge_size,
                            prune_dominated_pendants, simplify)
from .matching import SizeGuardError, WeightedGraph, max_weight_matching
from .result import SolveResult, Status
from .setpacking import max_weight_set_packing
from .timing import Deadline


def _empty(inst: Instance, t0: float, solver: str) -> SolveResult:
    return SolveResult(Solution(frozenset(), 0), Status.OPTIMAL, time.perf_counter() - t0,
                       lower_bound=0, solver=solver)


# -- matching based ----------------------------------------------------------

def _habitat_graph_or_none(inst: Instance):
    try:
        hg = build_habitat_graph(inst)
    except HabitatShapeError as exc:
        return None, str(exc)
    return prune_dominated_pendants(simplify(hg)), ""


def solve_mwm(inst: Instance, time_limit_ms: Optional[float] = None) -> SolveResult:
    """Exact when every habitat induces a cycle and no edge lies in three or more."""
    t0 = time.perf_counter()
    if not inst.habitats:
        return _empty(inst, t0, "mwm")
    hg, why = _habitat_graph_or_none(inst)
    if hg is None:
        return SolveResult.failed(Status.UNSUPPORTED, t0, "mwm", why)
    if max_hyperedge_size(hg) > 2:
        return SolveResult.failed(Status.UNSUPPORTED, t0, "mwm", "an edge is shared by three or more habitats")
    t_build = time.perf_counter() - t0
    wg = WeightedGraph(hg.node_count,
                       tuple((*sorted(he.nodes), he.weight) for he in hg.hyperedges))
    m = max_weight_matching(wg)
    sol = matching_to_solution(inst, hg, m)
    return SolveResult(sol, Status.OPTIMAL, time.perf_counter() - t0,
                       lower_bound=sol.total_cost, build_time=t_build, solver="mwm",
                       stats={"hyperedges": len(hg.hyperedges), "matching_weight": m.weight})


def solve_mwhm(inst: Instance, time_limit_ms: Optional[float] = None) -> SolveResult:
    """Exact for cycle habitats via weighted set packing on the habitat graph."""
    t0 = time.perf_counter()
    if not inst.habitats:
        return _empty(inst, t0, "mwhm")
    hg, why = _habitat_graph_or_none(inst)
    if hg is None:
        return SolveResult.failed(Status.UNSUPPORTED, t0, "mwhm", why)
    t_build = time.perf_counter() - t0
    m = max_weight_set_packing(hg, Deadline.from_ms(time_limit_ms))
    sol = matching_to_solution(inst, hg, m)
    stats = {"hyperedges": len(hg.hyperedges), "max_hyperedge": max_hyperedge_size(hg),
             "matching_weight": m.weight}
    if m.optimal:
        return SolveResult(sol, Status.OPTIMAL, time.perf_counter() - t0, lower_bound=sol.total_cost,
                           build_time=t_build, solver="mwhm", stats=stats)
    lb = covered_cost(inst) - m.upper_bound
    return SolveResult(sol, Status.TIMEOUT, time.perf_counter() - t0, lower_bound=lb,
                       build_time=t_build, solver="mwhm", stats=stats)


# -- generic branch and cut --------------------------------------------------

def separate_connectivity_cut(inst: Instance, x: Iterable[int], h: Iterable[int]) -> Optional[frozenset[int]]:
    """Edges between S and H \\ S for the component S of G[x][H] holding H's
    smallest vertex, or ``None`` when G[x][H] is connected."""
    g = inst.graph
    hs = frozenset(h)
    comps = habitat_components(g, x, hs)
    if len(comps) <= 1:
        return None
    s = set(comps[0])
    return frozenset(k for k in g.induced_edges(hs)
                     if (g.edges[k][0] in s) != (g.edges[k][1] in s))


GENERIC_BOUNDS = ("lp", "tree")
_EPS = 1e-9


class _BranchAndCut:
    """Exact search for one group of habitats whose edge sets interlock.

    Variables are the covered edges of the group. The cut pool starts with
    the single-vertex cuts of every habitat and grows by separating partial
    and rounded solutions; a cut with a single free edge fixes that edge.

    ``bound="lp"`` prunes with the LP relaxation of the pooled cuts and
    branches on its most fractional edge, which is how an integer program
    over the cut formulation is searched.

    ``bound="tree"`` uses the habitats directly: every feasible F contains a
    spanning tree of each G[H], so splitting edge costs evenly over the
    habitats containing them and summing per-habitat minimum spanning trees
    bounds the cost, and the union of those trees is feasible. The two only
    differ on shared edges used by some but not all of their habitats, and
    the search branches on such an edge.
    """

    def __init__(self, inst: Instance, habitat_ids: list[int], deadline: Deadline, bound: str = "lp"):
        g = inst.graph
        self.inst = inst
        self.bound = bound
        self.habitats = [inst.habitats[i] for i in habitat_ids]
        self.hab_edges = [inst.habitat_edges[i] for i in habitat_ids]
        self.edges = frozenset(k for es in self.hab_edges for k in es)
        self.order = sorted(self.edges)
        self.cost = inst.costs
        self.deadline = deadline
        share: dict[int, int] = {}
        for es in self.hab_edges:
            for k in es:
                share[k] = share.get(k, 0) + 1
        self.share = share
        self.scale = math.lcm(*set(share.values()))
        self.split = {k: self.cost[k] * self.scale // share[k] for k in share}
        self.pool: list[frozenset[int]] = []
        self._pool_set: set[frozenset[int]] = set()
        for h, es in zip(self.habitats, self.hab_edges):
            own = set(es)
            for v in sorted(h):
                self._add(frozenset(k for k in g.incidence[v] if k in own))
        self.best = frozenset(apx_edges(inst, habitat_ids))
        self.best_cost = inst.cost_of(self.best)
        self.nodes = 0
        self.root_bound: Optional[int] = None

    def _add(self, cut: frozenset[int]) -> bool:
        if cut in self._pool_set:
            return False
        self._pool_set.add(cut)
        self.pool.append(cut)
        return True

    def _separate_all(self, x) -> list[frozenset[int]]:
        out = []
        for h in self.habitats:
            cut = separate_connectivity_cut(self.inst, x, h)
            if cut is not None:
                out.append(cut)
        return out

    def _offer(self, edges: Iterable[int]) -> None:
        """Take a feasible edge set as incumbent after dropping redundant edges."""
        f = set(edges)
        if self._separate_all(f):
            return
        for k in sorted(f, key=lambda k: (-self.cost[k], k)):
            f.discard(k)
            if any(separate_connectivity_cut(self.inst, f, self.habitats[i]) is not None
                   for i in range(len(self.habitats)) if k in self.hab_edges[i]):
                f.add(k)
        c = sum(self.cost[k] for k in f)
        if c < self.best_cost:
            self.best, self.best_cost = frozenset(f), c

    def _propagate(self, one: set[int], zero: frozenset[int]) -> bool:
        """Fix edges that are the last free edge of an unsatisfied cut."""
        changed = True
        while changed:
            changed = False
            for cut in self.pool:
                if not cut.isdisjoint(one):
                    continue
                free = cut - zero
                if not free:
                    return False
                if len(free) == 1:
                    one |= free
                    changed = True
        return True

    def _connectable(self, zero: frozenset[int]) -> bool:
        cuts = self._separate_all(self.edges - zero)
        for cut in cuts:
            # some habitat cannot be connected without the excluded edges
            self._add(cut)
        return not cuts

    # -- LP bound --------------------------------------------------------

    def _lp(self, one: set[int], zero: frozenset[int]):
        free = [k for k in self.order if k not in one and k not in zero]
        col = {k: j for j, k in enumerate(free)}
        rows = [cut for cut in self.pool if cut.isdisjoint(one)]
        if not rows:
            return 0.0, {}
        a = np.zeros((len(rows), len(free)))
        for i, cut in enumerate(rows):
            for k in cut:
                if k in col:
                    a[i, col[k]] = -1.0
        res = linprog([self.cost[k] for k in free], A_ub=a, b_ub=-np.ones(len(rows)),
                      bounds=(0, 1), method="highs")
        if res.status != 0:
            raise IntegrityError(f"LP relaxation failed: {res.message}")
        return float(res.fun), {k: float(res.x[col[k]]) for k in free}

    def _separate_fractional(self, one: set[int], x: dict[int, float]) -> list[frozenset[int]]:
        """Minimum cuts of each G[H] under capacities x (1 on fixed edges) below one."""
        g = self.inst.graph
        out = []
        for h, es in zip(self.habitats, self.hab_edges):
            cap = {k: 1.0 if k in one else x.get(k, 0.0) for k in es}
            sub = nx.Graph()
            sub.add_nodes_from(sorted(h))
            for k in es:
                if cap[k] > _EPS:
                    u, v = g.edges[k]
                    sub.add_edge(u, v, weight=cap[k])
            if not nx.is_connected(sub):
                support = [k for k in es if cap[k] > _EPS]
                out.append(separate_connectivity_cut(self.inst, support, h))
                continue
            value, (side, _) = nx.stoer_wagner(sub)
            if value < 1 - 1e-6:
                s = set(side)
                out.append(frozenset(k for k in es if (g.edges[k][0] in s) != (g.edges[k][1] in s)))
        return out

    def _process_lp(self, one: set[int], zero: frozenset[int]):
        fixed = sum(self.cost[k] for k in one)
        while True:
            val, x = self._lp(one, zero)
            lb = fixed + math.ceil(val - 1e-6)
            if self.root_bound is None:
                self.root_bound = lb
            if lb >= self.best_cost:
                return None
            support = one | {k for k, v in x.items() if v > _EPS}
            self._offer(support)
            rounded = one | {k for k, v in x.items() if v >= 0.5}
            new = [c for c in self._separate_all(rounded) + self._separate_fractional(one, x)
                   if self._add(c)]
            violated = [c for c in new if sum(x.get(k, 0.0) for k in c) < 1 - 1e-6]
            if not violated:
                break
            if not self._propagate(one, zero):
                return None
            fixed = sum(self.cost[k] for k in one)
        frac = [(abs(v - 0.5), k) for k, v in x.items() if _EPS < v < 1 - _EPS]
        if not frac:
            # integral LP optimum satisfying every pooled and separated cut
            self._offer(one | {k for k, v in x.items() if v > 0.5})
            return None
        return min(frac)[1]

    # -- habitat tree bound ----------------------------------------------

    def _trees(self, one: set[int], zero: frozenset[int]):
        g, split = self.inst.graph, self.split
        trees = []
        for h, es in zip(self.habitats, self.hab_edges):
            parent = {v: v for v in h}

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            avail = sorted((k for k in es if k not in zero),
                           key=lambda k: (0 if k in one else split[k], k))
            tree = []
            for k in avail:
                a, b = (find(x) for x in g.edges[k])
                if a != b:
                    parent[a] = b
                    tree.append(k)
                    if len(tree) == len(h) - 1:
                        break
            trees.append(tree)
        return trees

    def _process_tree(self, one: set[int], zero: frozenset[int]):
        fixed = sum(self.cost[k] for k in one)
        used: dict[int, int] = {}
        scaled = 0
        for tree in self._trees(one, zero):
            for k in tree:
                if k not in one:
                    used[k] = used.get(k, 0) + 1
                    scaled += self.split[k]
        lb = fixed + -(-scaled // self.scale)
        if self.root_bound is None:
            self.root_bound = lb
        if lb >= self.best_cost:
            return None
        cand = fixed + sum(self.cost[k] for k in used)
        if cand < self.best_cost:
            self.best, self.best_cost = frozenset(one) | frozenset(used), cand
        for cut in self._separate_all(one):
            self._add(cut)
        gaps = [(self.cost[k] * (self.share[k] - n), -k) for k, n in used.items() if n < self.share[k]]
        if not gaps or cand <= lb:
            return None
        return -max(gaps)[1]

    def _process(self, one: frozenset[int], zero: frozenset[int]):
        """Return ``(one, edge)`` to branch on, or ``None`` if the node is closed."""
        one = set(one)
        if not self._propagate(one, zero) or not self._connectable(zero):
            return None
        if self.bound == "lp":
            edge = self._process_lp(one, zero)
        else:
            edge = self._process_tree(one, zero)
        return None if edge is None else (frozenset(one), edge)

    def root_lower_bound(self) -> int:
        """Bound of the unbranched problem, computed on demand if the search never started."""
        if self.root_bound is None:
            one: set[int] = set()
            if not self._propagate(one, frozenset()):
                return self.best_cost
            if self.bound == "lp":
                val, _ = self._lp(one, frozenset())
                return sum(self.cost[k] for k in one) + math.ceil(val - 1e-6)
            saved = self.best, self.best_cost
            self._process_tree(one, frozenset())
            self.best, self.best_cost = saved
        return self.root_bound if self.root_bound is not None else 0

    def run(self) -> bool:
        """Search to completion; False if the deadline cut it short."""
        stack = [(frozenset(), frozenset())]
        while stack:
            self.nodes += 1
            if self.deadline.expired():
                return False
            one, zero = stack.pop()
            out = self._process(one, zero)
            if out is None:
                continue
            one, edge = out
            stack.append((one, zero | {edge}))
            stack.append((one | {edge}, zero))
        return True


def _habitat_groups(inst: Instance) -> list[list[int]]:
    """Habitats grouped so that groups share no covered edge."""
    parent = list(range(len(inst.habitats)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for owners in inst.edge_habitats.values():
        for o in owners[1:]:
            a, b = find(owners[0]), find(o)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(len(inst.habitats)):
        groups.setdefault(find(i), []).append(i)
    return [groups[k] for k in sorted(groups)]


def solve_generic(inst: Instance, time_limit_ms: Optional[float] = None,
                  record_cuts: bool = False, bound: str = "lp") -> SolveResult:
    """Branch and cut over connectivity cuts; handles arbitrary habitats.

    Habitats that share no covered edge are solved as separate groups.
    """
    t0 = time.perf_counter()
    if bound not in GENERIC_BOUNDS:
        raise ValueError(f"bound must be one of {GENERIC_BOUNDS}")
    if not inst.habitats:
        return _empty(inst, t0, "generic")
    if inst.disconnected_habitats():
        return SolveResult.failed(Status.INFEASIBLE_INPUT, t0, "generic",
                                  "a habitat is disconnected in the input graph")
    deadline = Deadline.from_ms(time_limit_ms)
    groups = _habitat_groups(inst)
    searches = [_BranchAndCut(inst, grp, deadline, bound) for grp in groups]
    t_build = time.perf_counter() - t0
    done = []
    for s in searches:
        done.append(s.run() if all(done) else False)
    chosen = set()
    lb = 0
    for s, ok in zip(searches, done):
        chosen |= s.best
        lb += s.best_cost if ok else min(s.best_cost, s.root_lower_bound())
    sol = Solution.from_edges(inst, chosen)
    stats = {"nodes": sum(s.nodes for s in searches), "cuts": sum(len(s.pool) for s in searches),
             "groups": len(groups), "bound": bound}
    if record_cuts:
        stats["cut_pool"] = [c for s in searches for c in s.pool]
    status = Status.OPTIMAL if all(done) else Status.TIMEOUT
    return SolveResult(sol, status, time.perf_counter() - t0, lower_bound=lb,
                       build_time=t_build, solver="generic", stats=stats)


# -- polynomial special cases -----------------------------------------------

def solve_tree_habitats(inst: Instance, time_limit_ms: Optional[float] = None) -> SolveResult:
    """Every habitat induces a tree, so all induced habitat edges are needed."""
    t0 = time.perf_counter()
    for i, h in enumerate(inst.habitats):
        kind = classify_habitat(inst.graph, h)
        if kind not in (HabitatKind.P2, HabitatKind.TREE):
            return SolveResult.failed(Status.UNSUPPORTED, t0, "tree", f"habitat {i} induces {kind.value}")
    sol = Solution.from_edges(inst, inst.covered_edges)
    return SolveResult(sol, Status.OPTIMAL, time.perf_counter() - t0, lower_bound=sol.total_cost,
                       solver="tree")


def solve_maxdeg2(inst: Instance, time_limit_ms: Optional[float] = None) -> SolveResult:
    """Graphs of maximum degree two: components are paths and cycles."""
    t0 = time.perf_counter()
    g = inst.graph
    if g.max_degree() > 2:
        return SolveResult.failed(Status.UNSUPPORTED, t0, "deg2", "maximum degree exceeds two")
    if inst.disconnected_habitats():
        return SolveResult.failed(Status.INFEASIBLE_INPUT, t0, "deg2",
                                  "a habitat is disconnected in the input graph")
    forced: set[int] = set()
    cycles: dict[frozenset[int], list[int]] = {}
    for h, he in zip(inst.habitats, inst.habitat_edges):
        if classify_habitat(g, h) is HabitatKind.CYCLE:
            # a cycle habitat in a degree-two graph is a whole cycle component
            cycles[h] = list(he)
        else:
            forced.update(he)
    chosen = set(forced)
    for edges in cycles.values():
        loose = [k for k in edges if k not in forced]
        if loose:
            drop = min(loose, key=lambda k: (-inst.costs[k], k))
            chosen.update(k for k in edges if k != drop)
        else:
            chosen.update(edges)
    sol = Solution.from_edges(inst, chosen)
    return SolveResult(sol, Status.OPTIMAL, time.perf_counter() - t0, lower_bound=sol.total_cost,
                       solver="deg2")


@dataclass(frozen=True)
class K4Reduction:
    instance: Instance
    cost: int  # total minimum cost of the removed K4 components
    edge_map: tuple[int, ...]  # reduced edge index -> original edge index
    removed_solution: frozenset[int]  # optimal edges inside the removed components
    budget_exhausted: bool = False


def _local_min_solution(inst: Instance, edges: list[int], habitats: list[frozenset[int]]):
    best = None
    for mask in range(1 << len(edges)):
        f = frozenset(edges[i] for i in range(len(edges)) if mask >> i & 1)
        if all(len(habitat_components(inst.graph, f, h)) == 1 for h in habitats):
            c = inst.cost_of(f)
            if best is None or c < best[0]:
                best = (c, f)
    return best


def apply_k4_reduction(inst: Instance) -> K4Reduction:
    """Remove every K4 component around a vertex lying in three triangle habitats.

    Applies when the maximum degree is at most three and every habitat
    induces a triangle. Afterwards no edge lies in more than two habitats.
    """
    g = inst.graph
    if g.max_degree() > 3:
        raise InputError("K4 reduction needs maximum degree at most three")
    for i, h in enumerate(inst.habitats):
        if len(h) != 3 or classify_habitat(g, h) is not HabitatKind.CYCLE:
            raise InputError(f"habitat {i} is not a triangle")
    count = [0] * g.vertex_count
    for h in inst.habitats:
        for v in h:
            count[v] += 1
    removed_vertices: set[int] = set()
    removed_solution: set[int] = set()
    total = 0
    for v in range(g.vertex_count):
        if count[v] < 3 or v in removed_vertices:
            continue
        closed = frozenset([v, *g.neighbors(v)])
        inner = g.induced_edges(closed)
        leaving = any(g.other(k, x) not in closed for x in closed for k in g.incidence[x])
        if len(closed) != 4 or len(inner) != 6 or leaving:
            raise IntegrityError(f"vertex {v} is in three habitats but N[{v}] is not a K4 component")
        local = [h for h in inst.habitats if h <= closed]
        c, f = _local_min_solution(inst, inner, local)
        total += c
        removed_solution |= f
        removed_vertices |= closed
    if not removed_vertices:
        return K4Reduction(inst, 0, tuple(range(g.edge_count)), frozenset())
    keep_v = [x for x in range(g.vertex_count) if x not in removed_vertices]
    local_v = {x: i for i, x in enumerate(keep_v)}
    edge_map = tuple(k for k, (a, b) in enumerate(g.edges) if a in local_v and b in local_v)
    graph = Graph(len(keep_v), tuple((local_v[g.edges[k][0]], local_v[g.edges[k][1]]) for k in edge_map))
    habitats = tuple(frozenset(local_v[x] for x in h) for h in inst.habitats if h.isdisjoint(removed_vertices))
    budget = None
    exhausted = False
    if inst.budget is not None:
        budget = inst.budget - total
        if budget < 0:
            budget, exhausted = None, True
    reduced = Instance(graph, tuple(inst.costs[k] for k in edge_map), habitats, budget)
    return K4Reduction(reduced, total, edge_map, frozenset(removed_solution), exhausted)


def solve_k4_mwm(inst: Instance, time_limit_ms: Optional[float] = None) -> SolveResult:
    """K4 reduction followed by the matching solver (triangles, degree at most three)."""
    t0 = time.perf_counter()
    try:
        red = apply_k4_reduction(inst)
    except InputError as exc:
        return SolveResult.failed(Status.UNSUPPORTED, t0, "k4", str(exc))
    inner = solve_mwm(red.instance)
    if inner.status is not Status.OPTIMAL:
        return SolveResult.failed(inner.status, t0, "k4", inner.message)
    edges = red.removed_solution | {red.edge_map[k] for k in inner.solution.edge_indices}
    sol = Solution.from_edges(inst, edges)
    return SolveResult(sol, Status.OPTIMAL, time.perf_counter() - t0, lower_bound=sol.total_cost,
                       solver="k4", stats={"reduced_cost": red.cost})


# -- exhaustive oracle -------------------------------------------------------

_CHUNK = 1 << 18


def solve_brute_force(inst: Instance, max_edges: int = 22) -> SolveResult:
    """Minimum over all subsets of the covered edges.

    Subsets are bit masks over the ascending covered-edge list; among equal
    costs the smallest mask wins. Evaluation is vectorised with numpy but
    every subset is checked.
    """
    t0 = time.perf_counter()
    if not inst.habitats:
        return _empty(inst, t0, "brute")
    if inst.disconnected_habitats():
        return SolveResult.failed(Status.INFEASIBLE_INPUT, t0, "brute",
                                  "a habitat is disconnected in the input graph")
    cov = inst.covered_edges
    m = len(cov)
    if m > max_edges:
        raise SizeGuardError(f"{m} covered edges exceed the brute-force guard of {max_edges}")
    bit = {e: i for i, e in enumerate(cov)}
    g = inst.graph
    checks = []
    for h, he in sorted(zip(inst.habitats, inst.habitat_edges), key=lambda t: len(t[1])):
        loc = {v: i for i, v in enumerate(sorted(h))}
        checks.append((len(h), [(bit[k], loc[g.edges[k][0]], loc[g.edges[k][1]]) for k in he]))
    costs = np.array([inst.costs[e] for e in cov], dtype=np.int64)

    best_cost, best_mask = None, None
    for start in range(0, 1 << m, _CHUNK):
        masks = np.arange(start, min(1 << m, start + _CHUNK), dtype=np.int64)
        for size, hedges in checks:
            full = (1 << size) - 1
            reach = np.ones(masks.shape, dtype=np.int64)
            present = [((masks >> b) & 1).astype(bool) for b, _, _ in hedges]
            for _ in range(size - 1):
                before = reach
                for pres, (_, a, c) in zip(present, hedges):
                    touch = pres & ((((reach >> a) | (reach >> c)) & 1).astype(bool))
                    reach = np.where(touch, reach | ((1 << a) | (1 << c)), reach)
                if np.array_equal(before, reach):
                    break
            masks = masks[reach == full]
            if masks.size == 0:
                break
        if masks.size == 0:
            continue
        bits = (masks[:, None] >> np.arange(m, dtype=np.int64)) & 1
        c = bits @ costs
        i = int(np.argmin(c))
        if best_cost is None or int(c[i]) < best_cost:
            best_cost, best_mask = int(c[i]), int(masks[i])
    if best_mask is None:
        raise IntegrityError("no feasible subset although every habitat is connected")
    sol = Solution.from_edges(inst, [cov[i] for i in range(m) if best_mask >> i & 1])
    return SolveResult(sol, Status.OPTIMAL, time.perf_counter() - t0, lower_bound=sol.total_cost,
                       solver="brute")


# -- dispatch ----------------------------------------------------------------

SOLVERS: dict[str, Callable[..., SolveResult]] = {
    "tree": solve_tree_habitats,
    "deg2": solve_maxdeg2,
    "mwm": solve_mwm,
    "k4": solve_k4_mwm,
    "mwhm": solve_mwhm,
    "generic": solve_generic,
}

AUTO_ORDER = ("tree", "deg2", "mwm", "k4", "mwhm", "generic")


def solve_auto(inst: Instance, time_limit_ms: Optional[float] = None) -> SolveResult:
    """Run the most specialised solver that accepts the instance."""
    last = None
    for name in AUTO_ORDER:
        res = SOLVERS[name](inst, time_limit_ms)
        if res.status is not Status.UNSUPPORTED:
            res.stats.setdefault("picked", name)
            return res
        last = res
    return last


def solve(inst: Instance, solver: str, time_limit_ms: Optional[float] = None) -> SolveResult:
    if solver == "auto":
        return solve_auto(inst, time_limit_ms)
    if solver == "apx":
        return solve_apx(inst)
    if solver == "brute":
        return solve_brute_force(inst)
    if solver not in SOLVERS:
        raise ValueError(f"unknown solver {solver!r}")
    return SOLVERS[solver](inst, time_limit_ms)
