"""Graphs, habitats, instances and solution checking.

Edges are identified by their position in ``Graph.edges``; every other
module exchanges sets of edge indices, never endpoint pairs.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Optional


class InputError(ValueError):
    """Malformed graph, habitat or instance data."""


class IntegrityError(RuntimeError):
    """Internally inconsistent data, e.g. a stored cost that does not add up."""


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InputError("vertex_count must be nonnegative")
        normalized = []
        seen = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InputError(f"edge ({u}, {v}) has an endpoint out of range")
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise InputError(f"duplicate edge {pair}")
            seen.add(pair)
            normalized.append(pair)
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex tuple of incident edge indices, in edge order."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for k, (u, v) in enumerate(self.edges):
            inc[u].append(k)
            inc[v].append(k)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {pair: k for k, pair in enumerate(self.edges)}

    def find_edge(self, u: int, v: int) -> Optional[int]:
        return self.edge_index.get((u, v) if u < v else (v, u))

    def neighbors(self, v: int) -> list[int]:
        out = []
        for k in self.incidence[v]:
            a, b = self.edges[k]
            out.append(b if a == v else a)
        return out

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def max_degree(self) -> int:
        return max((len(x) for x in self.incidence), default=0)

    def other(self, k: int, v: int) -> int:
        a, b = self.edges[k]
        return b if a == v else a

    def check_edges(self, edge_set: Iterable[int]) -> frozenset[int]:
        out = frozenset(int(k) for k in edge_set)
        for k in out:
            if not 0 <= k < self.edge_count:
                raise InputError(f"edge index {k} out of range")
        return out

    def check_vertices(self, vs: Iterable[int]) -> frozenset[int]:
        out = frozenset(int(v) for v in vs)
        for v in out:
            if not 0 <= v < self.vertex_count:
                raise InputError(f"vertex index {v} out of range")
        return out

    def induced_edges(self, vs: Iterable[int]) -> list[int]:
        """Indices of the edges with both endpoints in ``vs``, ascending."""
        vs = vs if isinstance(vs, (set, frozenset)) else set(vs)
        found = set()
        for v in vs:
            for k in self.incidence[v]:
                if self.other(k, v) in vs:
                    found.add(k)
        return sorted(found)

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by smallest vertex."""
        seen = [False] * self.vertex_count
        comps = []
        for s in range(self.vertex_count):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.neighbors(x):
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps


class Subgraph(NamedTuple):
    graph: Graph
    vertex_map: tuple[int, ...]  # new vertex -> original vertex
    edge_map: tuple[int, ...]  # new edge -> original edge


def induced_subgraph(g: Graph, vs: Iterable[int]) -> Subgraph:
    """Subgraph induced by ``vs``; vertices are renumbered in ascending order."""
    vs = sorted(g.check_vertices(vs))
    local = {v: i for i, v in enumerate(vs)}
    edge_map = tuple(g.induced_edges(set(vs)))
    edges = tuple((local[g.edges[k][0]], local[g.edges[k][1]]) for k in edge_map)
    return Subgraph(Graph(len(vs), edges), tuple(vs), edge_map)


def edge_induced_subgraph(g: Graph, f: Iterable[int]) -> Subgraph:
    """Subgraph formed by the edges ``f`` and their endpoints."""
    f = sorted(g.check_edges(f))
    vs = sorted({v for k in f for v in g.edges[k]})
    local = {v: i for i, v in enumerate(vs)}
    edges = tuple((local[g.edges[k][0]], local[g.edges[k][1]]) for k in f)
    return Subgraph(Graph(len(vs), edges), tuple(vs), tuple(f))


def habitat_components(g: Graph, f: Iterable[int], h: Iterable[int]) -> list[list[int]]:
    """Components of G[f][h], each a sorted vertex list; ordered by smallest vertex.

    Vertices of ``h`` not touched by ``f`` come out as singleton components,
    matching the requirement ``h ⊆ V(G[f])``.
    """
    fs = f if isinstance(f, (set, frozenset)) else set(f)
    hs = h if isinstance(h, (set, frozenset)) else set(h)
    seen = set()
    comps = []
    for s in sorted(hs):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for k in g.incidence[x]:
                if k not in fs:
                    continue
                y = g.other(k, x)
                if y in hs and y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected_on(g: Graph, f: Iterable[int], h: Iterable[int]) -> bool:
    """True iff every vertex of ``h`` is in G[f] and G[f][h] is connected."""
    f = g.check_edges(f)
    h = g.check_vertices(h)
    if not h:
        return True
    if len(h) == 1:
        # a lone vertex still has to be covered by some edge of f
        (v,) = h
        return any(k in f for k in g.incidence[v])
    return len(habitat_components(g, f, h)) == 1


class HabitatKind(enum.Enum):
    P2 = "P2"
    TREE = "Tree"
    CYCLE = "Cycle"
    OTHER = "Other"


def classify_habitat(g: Graph, h: Iterable[int]) -> HabitatKind:
    h = g.check_vertices(h)
    ind = g.induced_edges(h)
    n, m = len(h), len(ind)
    if n == 2 and m == 1:
        return HabitatKind.P2
    if n < 2 or len(habitat_components(g, ind, h)) != 1:
        return HabitatKind.OTHER
    if m == n - 1:
        return HabitatKind.TREE
    if m == n and n >= 3:
        deg = dict.fromkeys(h, 0)
        for k in ind:
            a, b = g.edges[k]
            deg[a] += 1
            deg[b] += 1
        if all(d == 2 for d in deg.values()):
            return HabitatKind.CYCLE
    return HabitatKind.OTHER


@dataclass(frozen=True)
class Instance:
    """A graph with positive integer edge costs, habitats and an optional budget."""

    graph: Graph
    costs: tuple[int, ...]
    habitats: tuple[frozenset[int], ...]
    budget: Optional[int] = None

    def __post_init__(self):
        g = self.graph
        costs = tuple(int(c) for c in self.costs)
        if len(costs) != g.edge_count:
            raise InputError(f"expected {g.edge_count} costs, got {len(costs)}")
        if any(c < 1 for c in costs):
            raise InputError("edge costs must be positive integers")
        habitats = []
        for i, h in enumerate(self.habitats):
            hv = g.check_vertices(h)
            if len(hv) < 2:
                raise InputError(f"habitat {i} has fewer than two vertices")
            habitats.append(hv)
        if self.budget is not None and self.budget < 0:
            raise InputError("budget must be nonnegative")
        object.__setattr__(self, "costs", costs)
        object.__setattr__(self, "habitats", tuple(habitats))

    @classmethod
    def unit(cls, graph: Graph, habitats, budget=None) -> "Instance":
        return cls(graph, (1,) * graph.edge_count, tuple(habitats), budget)

    def with_budget(self, budget: Optional[int]) -> "Instance":
        return Instance(self.graph, self.costs, self.habitats, budget)

    def cost_of(self, edges: Iterable[int]) -> int:
        return sum(self.costs[k] for k in edges)

    @cached_property
    def habitat_edges(self) -> tuple[tuple[int, ...], ...]:
        """Induced edge indices of each habitat."""
        return tuple(tuple(self.graph.induced_edges(h)) for h in self.habitats)

    @cached_property
    def covered_edges(self) -> tuple[int, ...]:
        """Edges induced by at least one habitat, ascending."""
        return tuple(sorted({k for he in self.habitat_edges for k in he}))

    @cached_property
    def edge_habitats(self) -> dict[int, tuple[int, ...]]:
        """Covered edge -> indices of the habitats inducing it."""
        out: dict[int, list[int]] = {}
        for i, he in enumerate(self.habitat_edges):
            for k in he:
                out.setdefault(k, []).append(i)
        return {k: tuple(v) for k, v in out.items()}

    def kinds(self) -> list[HabitatKind]:
        return [classify_habitat(self.graph, h) for h in self.habitats]

    def disconnected_habitats(self) -> list[int]:
        """Habitats whose induced subgraph in G is not connected (no solution exists)."""
        return [i for i, (h, he) in enumerate(zip(self.habitats, self.habitat_edges))
                if len(habitat_components(self.graph, he, h)) != 1]


@dataclass(frozen=True)
class Solution:
    edge_indices: frozenset[int]
    total_cost: int

    @classmethod
    def from_edges(cls, inst: Instance, edges: Iterable[int]) -> "Solution":
        f = inst.graph.check_edges(edges)
        return cls(f, inst.cost_of(f))

    def sorted_edges(self) -> list[int]:
        return sorted(self.edge_indices)


class Verdict(NamedTuple):
    feasible: bool
    within_budget: bool


def verify_solution(inst: Instance, sol: Solution) -> Verdict:
    f = inst.graph.check_edges(sol.edge_indices)
    cost = inst.cost_of(f)
    if cost != sol.total_cost:
        raise IntegrityError(f"stored cost {sol.total_cost} differs from recomputed {cost}")
    feasible = all(is_connected_on(inst.graph, f, h) for h in inst.habitats)
    within = inst.budget is None or cost <= inst.budget
    return Verdict(feasible, within)
