"""The habitat hypergraph of a cycle-habitat instance.

Node ``i < r`` stands for habitat ``i``. Every covered edge that lies in a
single habitat gets a private pendant node, so each original edge maps to
exactly one hyperedge. Removing the edges of a matching from the covered
edge set leaves every habitat connected, and every feasible edge set
arises that way; maximum-weight matchings are minimum-cost solutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import HabitatKind, Instance, Solution, classify_habitat, is_connected_on
from .matching import Matching


class HabitatShapeError(ValueError):
    """A habitat does not induce a cycle."""


class MatchingError(ValueError):
    pass


@dataclass(frozen=True)
class HyperEdge:
    nodes: frozenset[int]
    weight: int
    origin: int  # edge index in the instance graph


@dataclass(frozen=True)
class HabitatGraph:
    habitat_count: int
    node_count: int
    hyperedges: tuple[HyperEdge, ...]
    # original edge index -> hyperedge position (None once dropped by a reduction)
    f: dict[int, Optional[int]]
    forced: frozenset[int] = frozenset()  # covered edges that belong to every solution built here

    @classmethod
    def from_hyperedges(cls, node_count: int, hyperedges: Iterable[tuple[Iterable[int], int]]) -> "HabitatGraph":
        """Free-standing hypergraph (origin = position); used for tests and benchmarks."""
        hes = tuple(HyperEdge(frozenset(ns), int(w), k) for k, (ns, w) in enumerate(hyperedges))
        for he in hes:
            if len(he.nodes) < 1 or any(not 0 <= x < node_count for x in he.nodes):
                raise ValueError("hyperedge nodes out of range")
        return cls(node_count, node_count, hes, {k: k for k in range(len(hes))})

    @property
    def pendant_nodes(self) -> range:
        return range(self.habitat_count, self.node_count)

    def is_pendant_edge(self, pos: int) -> bool:
        return any(x >= self.habitat_count for x in self.hyperedges[pos].nodes)

    def inverse(self) -> dict[int, int]:
        """Hyperedge position -> original edge index."""
        return {pos: e for e, pos in self.f.items() if pos is not None}

    def is_matching(self, positions: Iterable[int]) -> bool:
        used: set[int] = set()
        for pos in positions:
            ns = self.hyperedges[pos].nodes
            if not used.isdisjoint(ns):
                return False
            used |= ns
        return True

    def matching(self, positions: Iterable[int]) -> Matching:
        pos = frozenset(positions)
        if not self.is_matching(pos):
            raise MatchingError("hyperedges are not pairwise disjoint")
        return Matching(pos, sum(self.hyperedges[p].weight for p in pos))


def require_cycle_habitats(inst: Instance) -> None:
    for i, h in enumerate(inst.habitats):
        kind = classify_habitat(inst.graph, h)
        if kind is not HabitatKind.CYCLE:
            raise HabitatShapeError(f"habitat {i} induces {kind.value}, not a cycle")


def build_habitat_graph(inst: Instance) -> HabitatGraph:
    require_cycle_habitats(inst)
    r = len(inst.habitats)
    node_count = r
    hyperedges = []
    f: dict[int, Optional[int]] = {}
    for e in inst.covered_edges:
        owners = inst.edge_habitats[e]
        if len(owners) == 1:
            nodes = frozenset((owners[0], node_count))
            node_count += 1
        else:
            nodes = frozenset(owners)
        f[e] = len(hyperedges)
        hyperedges.append(HyperEdge(nodes, inst.costs[e], e))
    return HabitatGraph(r, node_count, tuple(hyperedges), f)


def _rebuild(hg: HabitatGraph, keep: list[int], forced: set[int]) -> HabitatGraph:
    new_pos = {old: i for i, old in enumerate(keep)}
    f = {e: (new_pos.get(pos) if pos is not None else None) for e, pos in hg.f.items()}
    return HabitatGraph(hg.habitat_count, hg.node_count,
                        tuple(hg.hyperedges[p] for p in keep), f,
                        hg.forced | frozenset(forced))


def simplify(hg: HabitatGraph) -> HabitatGraph:
    """Keep one hyperedge of maximum weight per node set (ties: first position).

    The origins of dropped hyperedges can never be removed from a solution
    built on the result and are recorded in ``forced``.
    """
    best: dict[frozenset[int], int] = {}
    for pos, he in enumerate(hg.hyperedges):
        cur = best.get(he.nodes)
        if cur is None or he.weight > hg.hyperedges[cur].weight:
            best[he.nodes] = pos
    keep = sorted(best.values())
    if len(keep) == len(hg.hyperedges):
        return hg
    kept = set(keep)
    forced = {he.origin for pos, he in enumerate(hg.hyperedges) if pos not in kept}
    return _rebuild(hg, keep, forced)


def prune_dominated_pendants(hg: HabitatGraph) -> HabitatGraph:
    """Keep only the heaviest pendant hyperedge at each habitat node.

    Pendant nodes are private, so any matching using a lighter pendant at
    habitat node b can swap it for the heaviest one at b; the optimum weight
    is unchanged.
    """
    best: dict[int, int] = {}
    for pos, he in enumerate(hg.hyperedges):
        if not hg.is_pendant_edge(pos):
            continue
        (b,) = [x for x in he.nodes if x < hg.habitat_count]
        cur = best.get(b)
        if cur is None or he.weight > hg.hyperedges[cur].weight:
            best[b] = pos
    winners = set(best.values())
    keep = [pos for pos in range(len(hg.hyperedges))
            if not hg.is_pendant_edge(pos) or pos in winners]
    if len(keep) == len(hg.hyperedges):
        return hg
    kept = set(keep)
    forced = {hg.hyperedges[p].origin for p in range(len(hg.hyperedges)) if p not in kept}
    return _rebuild(hg, keep, forced)


def covered_cost(inst: Instance) -> int:
    return inst.cost_of(inst.covered_edges)


def matching_to_solution(inst: Instance, hg: HabitatGraph, m: Matching) -> Solution:
    """Covered edges minus the origins of the matched hyperedges."""
    if not hg.is_matching(m.edges):
        raise MatchingError("hyperedges are not pairwise disjoint")
    removed = {hg.hyperedges[p].origin for p in m.edges}
    f = [e for e in inst.covered_edges if e not in removed]
    return Solution.from_edges(inst, f)


def solution_to_matching(inst: Instance, hg: HabitatGraph, edges: Iterable[int]) -> Matching:
    """Hyperedges of the covered edges missing from ``edges``.

    Raises ``MatchingError`` if the edge set leaves a habitat disconnected or
    omits an edge that ``hg`` no longer represents.
    """
    fs = inst.graph.check_edges(edges)
    for i, h in enumerate(inst.habitats):
        if not is_connected_on(inst.graph, fs, h):
            raise MatchingError(f"habitat {i} is not connected under the given edges")
    positions = []
    for e in inst.covered_edges:
        if e in fs:
            continue
        pos = hg.f.get(e)
        if pos is None:
            raise MatchingError(f"edge {e} is not represented in this habitat graph")
        positions.append(pos)
    return hg.matching(positions)


def max_habitats_per_edge(hg: HabitatGraph) -> int:
    """Largest number of habitats sharing one edge (pendant edges count as one)."""
    best = 0
    for pos, he in enumerate(hg.hyperedges):
        best = max(best, 1 if hg.is_pendant_edge(pos) else len(he.nodes))
    return best


def max_hyperedge_size(hg: HabitatGraph) -> int:
    return max((len(he.nodes) for he in hg.hyperedges), default=0)
