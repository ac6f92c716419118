"""Maximum-weight matching in general graphs.

The exact solver is the primal-dual blossom method of Edmonds in the
O(n^3) formulation of Galil. All weights are integers; vertex duals are
kept at twice their natural value so every dual and slack stays integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


@dataclass(frozen=True)
class WeightedGraph:
    node_count: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        seen = set()
        norm = []
        for u, v, w in self.edges:
            u, v, w = int(u), int(v), int(w)
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            if not (0 <= u < self.node_count and 0 <= v < self.node_count):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if w < 1:
                raise ValueError("weights must be positive integers")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"parallel edge {key}")
            seen.add(key)
            norm.append((u, v, w))
        object.__setattr__(self, "edges", tuple(norm))


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges (or hyperedges) given by position.

    ``optimal`` is False when a search stopped early; ``upper_bound`` then
    bounds the best achievable weight.
    """

    edges: frozenset[int]
    weight: int
    optimal: bool = True
    upper_bound: Optional[int] = None


class SizeGuardError(ValueError):
    """Input too large for an exhaustive oracle."""


def is_matching(wg: WeightedGraph, edge_ids: Iterable[int]) -> bool:
    used = set()
    for k in edge_ids:
        u, v, _ = wg.edges[k]
        if u in used or v in used:
            return False
        used.add(u)
        used.add(v)
    return True


class _Blossom:
    """Single-use solver state. Vertices are 0..n-1, blossoms n..2n-1.

    Edge endpoints are numbered 2k and 2k+1 for edge k; ``endpoint[p]`` is
    the vertex at endpoint p and ``p ^ 1`` is the opposite endpoint.
    """

    def __init__(self, n: int, edges: Sequence[tuple[int, int, int]]):
        self.n = n
        self.edges = edges
        m = len(edges)
        self.endpoint = [edges[p >> 1][p & 1] for p in range(2 * m)]
        self.neighbend: list[list[int]] = [[] for _ in range(n)]
        for k, (i, j, _) in enumerate(edges):
            self.neighbend[i].append(2 * k + 1)
            self.neighbend[j].append(2 * k)
        maxweight = max((w for _, _, w in edges), default=0)
        self.mate = [-1] * n
        # label: 0 free, 1 S (outer), 2 T (inner); bit 4 marks breadcrumbs in scan
        self.label = [0] * (2 * n)
        self.labelend = [-1] * (2 * n)
        self.inblossom = list(range(n))
        self.blossomparent = [-1] * (2 * n)
        self.blossomchilds: list[Optional[list[int]]] = [None] * (2 * n)
        self.blossombase = list(range(n)) + [-1] * n
        self.blossomendps: list[Optional[list[int]]] = [None] * (2 * n)
        self.bestedge = [-1] * (2 * n)
        self.blossombestedges: list[Optional[list[int]]] = [None] * (2 * n)
        self.unusedblossoms = list(range(2 * n - 1, n - 1, -1))
        self.dualvar = [maxweight] * n + [0] * n
        self.allowedge = [False] * m
        self.queue: list[int] = []

    def slack(self, k: int) -> int:
        i, j, w = self.edges[k]
        return self.dualvar[i] + self.dualvar[j] - 2 * w

    def leaves(self, b: int):
        if b < self.n:
            yield b
            return
        stack = [b]
        while stack:
            t = stack.pop()
            if t < self.n:
                yield t
            else:
                stack.extend(reversed(self.blossomchilds[t]))

    def assign_label(self, w: int, t: int, p: int) -> None:
        while True:
            b = self.inblossom[w]
            self.label[w] = self.label[b] = t
            self.labelend[w] = self.labelend[b] = p
            self.bestedge[w] = self.bestedge[b] = -1
            if t == 1:
                self.queue.extend(self.leaves(b))
                return
            # t == 2: the mate of the base becomes an S-vertex
            base = self.blossombase[b]
            mb = self.mate[base]
            w, t, p = self.endpoint[mb], 1, mb ^ 1

    def scan_blossom(self, v: int, w: int) -> int:
        """Trace back from v and w; return the base of a new blossom or -1."""
        label, labelend, endpoint, inblossom = self.label, self.labelend, self.endpoint, self.inblossom
        path = []
        base = -1
        while v != -1 or w != -1:
            b = inblossom[v]
            if label[b] & 4:
                base = self.blossombase[b]
                break
            path.append(b)
            label[b] = 5
            if labelend[b] == -1:
                v = -1
            else:
                v = endpoint[labelend[b]]
                b = inblossom[v]
                v = endpoint[labelend[b]]
            if w != -1:
                v, w = w, v
        for b in path:
            label[b] = 1
        return base

    def add_blossom(self, base: int, k: int) -> None:
        v, w, _ = self.edges[k]
        inblossom, endpoint, labelend = self.inblossom, self.endpoint, self.labelend
        bb = inblossom[base]
        bv = inblossom[v]
        bw = inblossom[w]
        b = self.unusedblossoms.pop()
        self.blossombase[b] = base
        self.blossomparent[b] = -1
        self.blossomparent[bb] = b
        path: list[int] = []
        endps: list[int] = []
        while bv != bb:
            self.blossomparent[bv] = b
            path.append(bv)
            endps.append(labelend[bv])
            v = endpoint[labelend[bv]]
            bv = inblossom[v]
        path.append(bb)
        path.reverse()
        endps.reverse()
        endps.append(2 * k)
        while bw != bb:
            self.blossomparent[bw] = b
            path.append(bw)
            endps.append(labelend[bw] ^ 1)
            w = endpoint[labelend[bw]]
            bw = inblossom[w]
        self.blossomchilds[b] = path
        self.blossomendps[b] = endps
        self.label[b] = 1
        labelend[b] = labelend[bb]
        self.dualvar[b] = 0
        for x in self.leaves(b):
            if self.label[inblossom[x]] == 2:
                # former T-vertices are now inside an S-blossom
                self.queue.append(x)
            inblossom[x] = b
        # best edges from the new blossom to each neighbouring S-blossom
        bestedgeto = {}
        for sub in path:
            if self.blossombestedges[sub] is None:
                cand = (p >> 1 for x in self.leaves(sub) for p in self.neighbend[x])
            else:
                cand = self.blossombestedges[sub]
            for kk in cand:
                i, j, _ = self.edges[kk]
                if inblossom[j] == b:
                    i, j = j, i
                bj = inblossom[j]
                if bj != b and self.label[bj] == 1:
                    cur = bestedgeto.get(bj)
                    if cur is None or self.slack(kk) < self.slack(cur):
                        bestedgeto[bj] = kk
            self.blossombestedges[sub] = None
            self.bestedge[sub] = -1
        best = [bestedgeto[x] for x in sorted(bestedgeto)]
        self.blossombestedges[b] = best
        self.bestedge[b] = -1
        for kk in best:
            if self.bestedge[b] == -1 or self.slack(kk) < self.slack(self.bestedge[b]):
                self.bestedge[b] = kk

    def expand_blossom(self, b: int, endstage: bool) -> None:
        n = self.n
        label, labelend, endpoint = self.label, self.labelend, self.endpoint
        childs = self.blossomchilds[b]
        for s in childs:
            self.blossomparent[s] = -1
            if s < n:
                self.inblossom[s] = s
            elif endstage and self.dualvar[s] == 0:
                self.expand_blossom(s, endstage)
            else:
                for x in self.leaves(s):
                    self.inblossom[x] = s
        if not endstage and label[b] == 2:
            # relabel the sub-blossoms on the even path through the blossom
            endps = self.blossomendps[b]
            entrychild = self.inblossom[endpoint[labelend[b] ^ 1]]
            j = childs.index(entrychild)
            if j & 1:
                j -= len(childs)
                jstep, endptrick = 1, 0
            else:
                jstep, endptrick = -1, 1
            p = labelend[b]
            while j != 0:
                label[endpoint[p ^ 1]] = 0
                label[endpoint[endps[j - endptrick] ^ endptrick ^ 1]] = 0
                self.assign_label(endpoint[p ^ 1], 2, p)
                self.allowedge[endps[j - endptrick] >> 1] = True
                j += jstep
                p = endps[j - endptrick] ^ endptrick
                self.allowedge[p >> 1] = True
                j += jstep
            bv = childs[j]
            label[endpoint[p ^ 1]] = label[bv] = 2
            labelend[endpoint[p ^ 1]] = labelend[bv] = p
            self.bestedge[bv] = -1
            j += jstep
            while childs[j] != entrychild:
                bv = childs[j]
                if label[bv] == 1:
                    j += jstep
                    continue
                reached = -1
                for x in self.leaves(bv):
                    if label[x] != 0:
                        reached = x
                        break
                if reached != -1:
                    label[reached] = 0
                    label[endpoint[self.mate[self.blossombase[bv]]]] = 0
                    self.assign_label(reached, 2, labelend[reached])
                j += jstep
        label[b] = labelend[b] = -1
        self.blossomchilds[b] = self.blossomendps[b] = None
        self.blossombase[b] = -1
        self.blossombestedges[b] = None
        self.bestedge[b] = -1
        self.unusedblossoms.append(b)

    def augment_blossom(self, b: int, v: int) -> None:
        n = self.n
        t = v
        while self.blossomparent[t] != b:
            t = self.blossomparent[t]
        if t >= n:
            self.augment_blossom(t, v)
        childs = self.blossomchilds[b]
        endps = self.blossomendps[b]
        i = j = childs.index(t)
        if i & 1:
            j -= len(childs)
            jstep, endptrick = 1, 0
        else:
            jstep, endptrick = -1, 1
        endpoint = self.endpoint
        while j != 0:
            j += jstep
            t = childs[j]
            p = endps[j - endptrick] ^ endptrick
            if t >= n:
                self.augment_blossom(t, endpoint[p])
            j += jstep
            t = childs[j]
            if t >= n:
                self.augment_blossom(t, endpoint[p ^ 1])
            self.mate[endpoint[p]] = p ^ 1
            self.mate[endpoint[p ^ 1]] = p
        self.blossomchilds[b] = childs[i:] + childs[:i]
        self.blossomendps[b] = endps[i:] + endps[:i]
        self.blossombase[b] = self.blossombase[self.blossomchilds[b][0]]

    def augment_matching(self, k: int) -> None:
        v, w, _ = self.edges[k]
        endpoint, inblossom, labelend = self.endpoint, self.inblossom, self.labelend
        for s, p in ((v, 2 * k + 1), (w, 2 * k)):
            while True:
                bs = inblossom[s]
                if bs >= self.n:
                    self.augment_blossom(bs, s)
                self.mate[s] = p
                if labelend[bs] == -1:
                    break
                t = endpoint[labelend[bs]]
                bt = inblossom[t]
                s = endpoint[labelend[bt]]
                j = endpoint[labelend[bt] ^ 1]
                if bt >= self.n:
                    self.augment_blossom(bt, j)
                self.mate[j] = labelend[bt]
                p = labelend[bt] ^ 1

    def _stage(self) -> bool:
        """Grow alternating trees until an augmentation happens; False if none."""
        n = self.n
        label, inblossom = self.label, self.inblossom
        label[:] = [0] * (2 * n)
        self.bestedge[:] = [-1] * (2 * n)
        self.blossombestedges[n:] = [None] * n
        self.allowedge[:] = [False] * len(self.allowedge)
        self.queue[:] = []
        for v in range(n):
            if self.mate[v] == -1 and label[inblossom[v]] == 0:
                self.assign_label(v, 1, -1)
        while True:
            while self.queue:
                v = self.queue.pop()
                for p in self.neighbend[v]:
                    k = p >> 1
                    w = self.endpoint[p]
                    if inblossom[v] == inblossom[w]:
                        continue
                    kslack = 0
                    if not self.allowedge[k]:
                        kslack = self.slack(k)
                        if kslack <= 0:
                            self.allowedge[k] = True
                    if self.allowedge[k]:
                        if label[inblossom[w]] == 0:
                            self.assign_label(w, 2, p ^ 1)
                        elif label[inblossom[w]] == 1:
                            base = self.scan_blossom(v, w)
                            if base >= 0:
                                self.add_blossom(base, k)
                            else:
                                self.augment_matching(k)
                                return True
                        elif label[w] == 0:
                            label[w] = 2
                            self.labelend[w] = p ^ 1
                    elif label[inblossom[w]] == 1:
                        b = inblossom[v]
                        if self.bestedge[b] == -1 or kslack < self.slack(self.bestedge[b]):
                            self.bestedge[b] = k
                    elif label[w] == 0:
                        if self.bestedge[w] == -1 or kslack < self.slack(self.bestedge[w]):
                            self.bestedge[w] = k

            # no augmenting path with tight edges: adjust the duals
            dualvar = self.dualvar
            deltatype = 1
            delta = min(dualvar[:n])
            deltaedge = deltablossom = -1
            for v in range(n):
                if label[inblossom[v]] == 0 and self.bestedge[v] != -1:
                    d = self.slack(self.bestedge[v])
                    if d < delta:
                        delta, deltatype, deltaedge = d, 2, self.bestedge[v]
            for b in range(2 * n):
                if self.blossomparent[b] == -1 and label[b] == 1 and self.bestedge[b] != -1:
                    d = self.slack(self.bestedge[b]) // 2
                    if d < delta:
                        delta, deltatype, deltaedge = d, 3, self.bestedge[b]
            for b in range(n, 2 * n):
                if (self.blossombase[b] >= 0 and self.blossomparent[b] == -1
                        and label[b] == 2 and dualvar[b] < delta):
                    delta, deltatype, deltablossom = dualvar[b], 4, b
            for v in range(n):
                lb = label[inblossom[v]]
                if lb == 1:
                    dualvar[v] -= delta
                elif lb == 2:
                    dualvar[v] += delta
            for b in range(n, 2 * n):
                if self.blossombase[b] >= 0 and self.blossomparent[b] == -1:
                    if label[b] == 1:
                        dualvar[b] += delta
                    elif label[b] == 2:
                        dualvar[b] -= delta
            if deltatype == 1:
                # some S-vertex dual reached zero: the matching is optimal
                return False
            if deltatype == 2:
                self.allowedge[deltaedge] = True
                i, j, _ = self.edges[deltaedge]
                if label[inblossom[i]] == 0:
                    i = j
                self.queue.append(i)
            elif deltatype == 3:
                self.allowedge[deltaedge] = True
                i, _, _ = self.edges[deltaedge]
                self.queue.append(i)
            else:
                self.expand_blossom(deltablossom, False)

    def run(self) -> list[int]:
        n = self.n
        for _ in range(n):
            if not self._stage():
                break
            for b in range(n, 2 * n):
                if (self.blossomparent[b] == -1 and self.blossombase[b] >= 0
                        and self.label[b] == 1 and self.dualvar[b] == 0):
                    self.expand_blossom(b, True)
        return [k for k, (i, j, _) in enumerate(self.edges)
                if self.mate[i] != -1 and self.endpoint[self.mate[i]] == j]


def max_weight_matching(wg: WeightedGraph) -> Matching:
    """Maximum-weight (not maximum-cardinality) matching of ``wg``.

    Connected components are matched independently. The result depends only
    on the order of ``wg.edges``, so repeated runs on the same input agree
    exactly.
    """
    if not wg.edges:
        return Matching(frozenset(), 0)
    parent: dict[int, int] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, _ in wg.edges:
        a, b = find(u), find(v)
        if a != b:
            parent[max(a, b)] = min(a, b)
    comps: dict[int, list[int]] = {}
    for k, (u, _, _) in enumerate(wg.edges):
        comps.setdefault(find(u), []).append(k)
    chosen: list[int] = []
    for root in sorted(comps):
        ks = comps[root]
        if len(ks) == 1:
            chosen.append(ks[0])
            continue
        used = sorted({x for k in ks for x in wg.edges[k][:2]})
        local = {v: i for i, v in enumerate(used)}
        sub = [(local[wg.edges[k][0]], local[wg.edges[k][1]], wg.edges[k][2]) for k in ks]
        chosen += [ks[j] for j in _Blossom(len(used), sub).run()]
    return Matching(frozenset(chosen), sum(wg.edges[k][2] for k in chosen))


def brute_force_matching(wg: WeightedGraph, max_edges: int = 25) -> Matching:
    """Best matching by exhaustive enumeration; refuses more than ``max_edges`` edges.

    Subsets that stop being matchings are cut off as soon as a conflict
    appears, so only matchings are ever completed. Ties go to the
    lexicographically smallest sorted edge list.
    """
    m = len(wg.edges)
    if m > max_edges:
        raise SizeGuardError(f"{m} edges exceed the brute-force guard of {max_edges}")
    best_w = 0
    best: tuple[int, ...] = ()

    def rec(k: int, used: frozenset, chosen: tuple, w: int):
        nonlocal best_w, best
        if k == m:
            if w > best_w or (w == best_w and chosen < best):
                best_w, best = w, chosen
            return
        u, v, wt = wg.edges[k]
        if u not in used and v not in used:
            rec(k + 1, used | {u, v}, chosen + (k,), w + wt)
        rec(k + 1, used, chosen, w)

    rec(0, frozenset(), (), 0)
    return Matching(frozenset(best), best_w)
