"""Exact maximum-weight set packing by branch and bound.

Solves ``max Σ w_e x_e  s.t.  Σ_{e ∋ v} x_e ≤ 1, x ∈ {0,1}`` over the
hyperedges of a habitat graph without an LP solver. Independent components
of the conflict structure are solved separately.
"""

from __future__ import annotations

import math
from typing import Optional

from .habitat_graph import HabitatGraph
from .matching import Matching, SizeGuardError
from .timing import Deadline

_CHECK_EVERY = 256


class _Component:
    def __init__(self, items: list[tuple[frozenset[int], int, int]]):
        # branch order: heaviest first, then hyperedge position
        self.items = sorted(items, key=lambda it: (-it[1], it[2]))
        card = max((len(ns) for ns, _, _ in self.items), default=1)
        self.scale = math.lcm(*range(1, card + 1))
        self.nodes_checked = 0

    def upper_bound(self, und: list[int]) -> int:
        """Fractional node bound on the best packing among ``und``.

        Each hyperedge spreads its weight evenly over its nodes that it shares
        with some other undecided hyperedge; every node can be used once, so
        the sum of per-node maxima bounds the packing. Hyperedges conflicting
        with nothing count in full.
        """
        items, scale = self.items, self.scale
        deg: dict[int, int] = {}
        for j in und:
            for x in items[j][0]:
                deg[x] = deg.get(x, 0) + 1
        best: dict[int, int] = {}
        total = 0
        plain = 0
        for j in und:
            ns, w, _ = items[j]
            plain += w
            shared = [x for x in ns if deg[x] > 1]
            if not shared:
                total += w * scale
                continue
            share = w * scale // len(shared)
            for x in shared:
                if share > best.get(x, 0):
                    best[x] = share
        total += sum(best.values())
        return min(plain, total // scale)

    def solve(self, deadline: Deadline) -> tuple[list[int], int, bool, int]:
        items = self.items
        root = list(range(len(items)))
        root_bound = self.upper_bound(root)
        # greedy incumbent
        used: set[int] = set()
        best_chosen: list[int] = []
        for j in root:
            if used.isdisjoint(items[j][0]):
                used |= items[j][0]
                best_chosen.append(j)
        best_w = sum(items[j][1] for j in best_chosen)
        complete = True
        stack = [(root, frozenset(), 0, ())]
        while stack:
            self.nodes_checked += 1
            if self.nodes_checked % _CHECK_EVERY == 0 and deadline.expired():
                complete = False
                break
            und, used, w, chosen = stack.pop()
            und = [j for j in und if used.isdisjoint(items[j][0])]
            # hyperedges without conflicts are always worth taking
            deg: dict[int, int] = {}
            for j in und:
                for x in items[j][0]:
                    deg[x] = deg.get(x, 0) + 1
            free = [j for j in und if all(deg[x] == 1 for x in items[j][0])]
            if free:
                fs = set(free)
                und = [j for j in und if j not in fs]
                w += sum(items[j][1] for j in free)
                chosen = chosen + tuple(free)
            if not und:
                if w > best_w:
                    best_w, best_chosen = w, list(chosen)
                continue
            if w + self.upper_bound(und) <= best_w:
                continue
            j, rest = und[0], und[1:]
            stack.append((rest, used, w, chosen))
            stack.append((rest, used | items[j][0], w + items[j][1], chosen + (j,)))
        positions = sorted(items[j][2] for j in best_chosen)
        return positions, best_w, complete, (best_w if complete else max(best_w, root_bound))


def _components(hyperedges) -> list[list[int]]:
    parent: dict[int, int] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for he in hyperedges:
        ns = sorted(he.nodes)
        for x in ns[1:]:
            a, b = find(ns[0]), find(x)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for pos, he in enumerate(hyperedges):
        groups.setdefault(find(min(he.nodes)), []).append(pos)
    return [groups[k] for k in sorted(groups)]


def max_weight_set_packing(hg: HabitatGraph, deadline: Optional[Deadline] = None) -> Matching:
    """Maximum-weight set of pairwise disjoint hyperedges.

    If ``deadline`` expires the best packing found so far is returned with
    ``optimal=False`` and a valid ``upper_bound``.
    """
    deadline = deadline or Deadline()
    chosen: list[int] = []
    weight = 0
    bound = 0
    optimal = True
    for comp in _components(hg.hyperedges):
        items = [(hg.hyperedges[p].nodes, hg.hyperedges[p].weight, p) for p in comp]
        part = _Component(items)
        if optimal:
            pos, w, done, ub = part.solve(deadline)
        else:
            pos, w, done, ub = [], 0, False, part.upper_bound(list(range(len(items))))
        chosen += pos
        weight += w
        bound += ub
        optimal = optimal and done
    return Matching(frozenset(chosen), weight, optimal, None if optimal else bound)


def brute_force_set_packing(hg: HabitatGraph, max_edges: int = 20) -> Matching:
    """Exhaustive optimum over all packings; refuses more than ``max_edges`` hyperedges."""
    hes = hg.hyperedges
    m = len(hes)
    if m > max_edges:
        raise SizeGuardError(f"{m} hyperedges exceed the brute-force guard of {max_edges}")
    best_w = 0
    best: tuple[int, ...] = ()

    def rec(k: int, used: frozenset, chosen: tuple, w: int):
        nonlocal best_w, best
        if k == m:
            if w > best_w or (w == best_w and chosen < best):
                best_w, best = w, chosen
            return
        if used.isdisjoint(hes[k].nodes):
            rec(k + 1, used | hes[k].nodes, chosen + (k,), w + hes[k].weight)
        rec(k + 1, used, chosen, w)

    rec(0, frozenset(), (), 0)
    return Matching(frozenset(best), best_w)
