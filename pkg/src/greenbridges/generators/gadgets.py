"""Crownings, cubic vertex cover instances and the reductions to RGBP.

Each ``construct_*`` function maps a cubic graph G and a budget p to an
instance with unit costs and budget k such that G has a vertex cover of size
at most p exactly when the instance has a solution of cost at most k.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

import networkx as nx

from ..graph import Graph, InputError, Instance


class GraphBuilder:
    """Mutable edge list with stable indices and a habitat list."""

    def __init__(self, n: int = 0):
        self.n = n
        self.edges: list[tuple[int, int]] = []
        self._index: dict[tuple[int, int], int] = {}
        self.habitats: list[frozenset[int]] = []

    def add_vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def add_edge(self, u: int, v: int) -> int:
        key = (min(u, v), max(u, v))
        if key not in self._index:
            self._index[key] = len(self.edges)
            self.edges.append(key)
        return self._index[key]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._index

    def add_path(self, a: int, b: int, length: int) -> list[int]:
        """Fresh path of ``length`` edges from a to b; returns its vertices."""
        if length < 1:
            raise ValueError("path needs at least one edge")
        vs = [a] + [self.add_vertex() for _ in range(length - 1)] + [b]
        for u, v in zip(vs, vs[1:]):
            self.add_edge(u, v)
        return vs

    def crown(self, a: int, b: int, p: int, q: int) -> tuple[list[int], frozenset[int], frozenset[int]]:
        """Add a (p, q)-crowning between a and b.

        A base path with p inner vertices and two crown paths with q inner
        vertices each; every crown path closes a cycle on p + q + 2 vertices
        with the base, and each cycle becomes a habitat. Paths of a single
        edge coincide with the edge ab. Returns the base path and both
        habitats.
        """
        if p < 0 or q < 0:
            raise ValueError("crowning parameters must be non-negative")
        base = self.add_path(a, b, p + 1)
        crowns = [self.add_path(a, b, q + 1) for _ in range(2)]
        hs = [frozenset(base) | frozenset(c) for c in crowns]
        self.habitats.extend(hs)
        return base, hs[0], hs[1]

    def build(self, budget: Optional[int] = None) -> Instance:
        g = Graph(self.n, tuple(self.edges))
        return Instance(g, (1,) * g.edge_count, tuple(self.habitats), budget)


def crown(g: Graph, a: int, b: int, p: int, q: int) -> tuple[Graph, tuple[frozenset[int], frozenset[int]]]:
    """Attach a (p, q)-crowning to a copy of ``g``; new vertices and edges come last."""
    g.check_vertices([a, b])
    if a == b:
        raise InputError("crowning needs two distinct vertices")
    bld = GraphBuilder(g.vertex_count)
    for u, v in g.edges:
        bld.add_edge(u, v)
    _, h1, h2 = bld.crown(a, b, p, q)
    return Graph(bld.n, tuple(bld.edges)), (h1, h2)


def crowning_instance(p: int, q: int) -> Instance:
    """A lone (p, q)-crowning between vertices 0 and 1."""
    bld = GraphBuilder(2)
    bld.crown(0, 1, p, q)
    return bld.build()


def crowning_min_cost(p: int, q: int) -> int:
    """Optimum of a lone crowning under unit costs: every edge except one per crown path."""
    return p + 2 * q + 1


@dataclass(frozen=True)
class CVCInstance:
    graph: Graph
    p: int

    def __post_init__(self):
        if any(self.graph.degree(v) != 3 for v in range(self.graph.vertex_count)):
            raise InputError("vertex cover instances must be cubic")
        if self.p < 0:
            raise InputError("budget must be non-negative")


def min_vertex_cover_size(g: Graph, max_vertices: int = 16) -> int:
    """Smallest vertex cover by exhaustive search over subsets by size."""
    if g.vertex_count > max_vertices:
        raise ValueError(f"{g.vertex_count} vertices exceed the brute-force guard of {max_vertices}")
    for size in range(g.vertex_count + 1):
        for cover in itertools.combinations(range(g.vertex_count), size):
            cs = set(cover)
            if all(u in cs or v in cs for u, v in g.edges):
                return size
    return g.vertex_count


def cvc_brute_force(cvc: CVCInstance | Graph, max_vertices: int = 16) -> int:
    """Minimum vertex cover size of the instance graph."""
    g = cvc.graph if isinstance(cvc, CVCInstance) else cvc
    return min_vertex_cover_size(g, max_vertices)


def _as_cvc(g_or_cvc, p: Optional[int]) -> CVCInstance:
    if isinstance(g_or_cvc, CVCInstance):
        return g_or_cvc if p is None else CVCInstance(g_or_cvc.graph, p)
    return CVCInstance(g_or_cvc, 0 if p is None else p)


def construct_c3(cvc: CVCInstance | Graph, p: Optional[int] = None, ell: Optional[int] = None) -> Instance:
    """Habitats of size 2 and 3 (triangles); with ``ell`` every habitat is an
    induced cycle on ``ell`` vertices."""
    c = _as_cvc(cvc, p)
    g = c.graph
    bld = GraphBuilder(g.vertex_count)
    x = bld.add_vertex()
    for v in range(g.vertex_count):
        bld.add_edge(v, x)
    if ell is None:
        for u, v in g.edges:
            bld.add_edge(u, v)
            bld.habitats.append(frozenset((u, v)))
        for u, v in g.edges:
            bld.habitats.append(frozenset((u, v, x)))
        return bld.build(g.edge_count + c.p)
    if ell < 3:
        raise ValueError("cycle length must be at least 3")
    for u, v in g.edges:
        base, _, _ = bld.crown(u, v, ell - 3, 1)
        bld.habitats.append(frozenset(base) | {x})
    return bld.build(g.edge_count * ell + c.p)


def construct_planar(cvc: CVCInstance | Graph, p: Optional[int] = None, ell: Optional[int] = None) -> Instance:
    """Two apexes x and y; habitats of size 2 and 4. With even ``ell`` >= 4 or
    odd ``ell`` >= 7 every habitat is an induced cycle on ``ell`` vertices.
    Planar whenever G is."""
    c = _as_cvc(cvc, p)
    g = c.graph
    n = g.vertex_count
    bld = GraphBuilder(n)
    x, y = bld.add_vertex(), bld.add_vertex()
    for v in range(n):
        bld.add_edge(v, y)
    if ell is None:
        for v in range(n):
            bld.add_edge(v, x)
            bld.habitats.append(frozenset((v, x)))
        # G' has no edges of G: H' induces the 4-cycle x u y v
        for u, v in g.edges:
            bld.habitats.append(frozenset((u, v, x, y)))
        return bld.build(n + c.p)
    if ell >= 4 and ell % 2 == 0:
        bases = {}
        for v in range(n):
            bases[v], _, _ = bld.crown(v, x, ell // 2 - 2, ell // 2)
        for u, v in g.edges:
            bld.habitats.append(frozenset(bases[u]) | frozenset(bases[v]) | {y})
        return bld.build(n * (ell // 2 - 2 + 2 * (ell // 2) + 1) + c.p)
    if ell >= 7 and ell % 2 == 1:
        lo, hi = (ell - 1) // 2, (ell + 1) // 2
        short, long_ = {}, {}
        for v in range(n):
            short[v], _, _ = bld.crown(v, x, lo - 2, hi)
            long_[v], _, _ = bld.crown(v, x, hi - 2, lo)
        for u, v in g.edges:
            # x .. u on u's short base, u y v, then v's long base back to x
            bld.habitats.append(frozenset(short[u]) | frozenset(long_[v]) | {y})
        per_vertex = (lo - 2 + 2 * hi + 1) + (hi - 2 + 2 * lo + 1)
        return bld.build(n * per_vertex + c.p)
    raise ValueError("planar construction supports even ell >= 4 and odd ell >= 7")


def construct_deg(cvc: CVCInstance | Graph, p: Optional[int] = None, ell: Optional[int] = None,
                  mode: str = "crown") -> Instance:
    """Maximum degree 4 with habitats of size 2 and 4 (a mirror copy of G joined
    by rungs). With ``ell`` >= 4 every habitat is either an edge and an induced
    cycle on ``ell`` vertices (``mode='subdivide'``) or always such a cycle
    (``mode='crown'``)."""
    c = _as_cvc(cvc, p)
    g = c.graph
    n, m = g.vertex_count, g.edge_count
    bld = GraphBuilder(2 * n)
    for v in range(n):
        bld.add_edge(v, n + v)
    if ell is None:
        for u, v in g.edges:
            bld.add_edge(u, v)
            bld.add_edge(n + u, n + v)
            bld.habitats.append(frozenset((u, v)))
            bld.habitats.append(frozenset((n + u, n + v)))
        for u, v in g.edges:
            bld.habitats.append(frozenset((u, v, n + u, n + v)))
        return bld.build(2 * m + c.p)
    if ell < 4:
        raise ValueError("cycle length must be at least 4")
    if mode == "subdivide":
        for u, v in g.edges:
            path = bld.add_path(u, v, ell - 3)
            for a, b in zip(path, path[1:]):
                bld.habitats.append(frozenset((a, b)))
            bld.add_edge(n + u, n + v)
            bld.habitats.append(frozenset((n + u, n + v)))
            bld.habitats.append(frozenset(path) | {n + u, n + v})
        return bld.build(m * (ell - 3) + m + c.p)
    if mode == "crown":
        for u, v in g.edges:
            base, _, _ = bld.crown(u, v, ell - 4, 2)
            mirror, _, _ = bld.crown(n + u, n + v, 0, ell - 2)
            bld.habitats.append(frozenset(base) | frozenset(mirror))
        return bld.build(m * (ell + 1) + m * (2 * ell - 3) + c.p)
    raise ValueError(f"unknown mode {mode!r}")


def construct_bintree(cvc: CVCInstance | Graph, p: Optional[int] = None, crown: bool = False) -> Instance:
    """Two complete binary trees whose leaves stand for the vertices of G and
    are joined by rungs. Maximum degree 3; every non-edge habitat is an
    induced cycle through both trees. With ``crown`` every tree edge is
    replaced by a (0, 1)-crowning so that all habitats are cycles."""
    c = _as_cvc(cvc, p)
    g = c.graph
    depth = max(1, (g.vertex_count - 1).bit_length())
    leaves = 1 << depth
    size = 2 * leaves - 1
    # heap numbering 1..size; tree T uses ids 0..size-1, tree T' size..2*size-1
    bld = GraphBuilder(2 * size)

    def t(i):
        return i - 1

    def t2(i):
        return size + i - 1

    tree_edges = 0
    for i in range(2, size + 1):
        for f in (t, t2):
            a, b = f(i // 2), f(i)
            if crown:
                bld.crown(a, b, 0, 1)
            else:
                bld.add_edge(a, b)
                bld.habitats.append(frozenset((a, b)))
            tree_edges += 1
    for j in range(leaves):
        bld.add_edge(t(leaves + j), t2(leaves + j))

    def heap_path(i, j):
        up_i, up_j = [i], [j]
        while i != j:
            if i > j:
                i //= 2
                up_i.append(i)
            else:
                j //= 2
                up_j.append(j)
        return set(up_i) | set(up_j)

    for u, v in g.edges:
        hp = heap_path(leaves + u, leaves + v)
        bld.habitats.append(frozenset(t(i) for i in hp) | frozenset(t2(i) for i in hp))
    per_edge = 3 if crown else 1
    return bld.build(per_edge * tree_edges + c.p)


CONSTRUCTIONS = {
    "c3": construct_c3,
    "planar": construct_planar,
    "deg": construct_deg,
    "bintree": construct_bintree,
}


# -- cubic graphs ------------------------------------------------------------

def _labelled_cubic(n: int) -> Iterator[list[tuple[int, int]]]:
    """Edge lists of cubic graphs on n vertices, with interchangeable untouched
    vertices pruned so only the first of them is ever tried."""
    deg = [0] * n
    edges: list[tuple[int, int]] = []

    def rec(v):
        if v == n:
            yield list(edges)
            return
        if deg[v] == 3:
            yield from rec(v + 1)
            return
        fresh_seen = False
        lo = edges[-1][1] + 1 if edges and edges[-1][0] == v else v + 1
        for w in range(lo, n):
            if deg[w] == 3:
                continue
            if deg[w] == 0:
                if fresh_seen:
                    continue
                fresh_seen = True
            deg[v] += 1
            deg[w] += 1
            edges.append((v, w))
            yield from rec(v)
            edges.pop()
            deg[v] -= 1
            deg[w] -= 1

    yield from rec(0)


def connected_cubic_graphs(n: int) -> list[Graph]:
    """All connected cubic graphs on ``n`` vertices up to isomorphism."""
    if n < 4 or n % 2:
        return []
    classes: dict[str, list[nx.Graph]] = {}
    out: list[Graph] = []
    for edges in _labelled_cubic(n):
        G = nx.Graph(edges)
        if G.number_of_nodes() != n or not nx.is_connected(G):
            continue
        key = nx.weisfeiler_lehman_graph_hash(G, iterations=4)
        bucket = classes.setdefault(key, [])
        if any(nx.is_isomorphic(G, H) for H in bucket):
            continue
        bucket.append(G)
        out.append(Graph(n, tuple(edges)))
    return out


def named_cubic_graph(name: str) -> Graph:
    name = name.lower()
    builders = {
        "k4": lambda: nx.complete_graph(4),
        "k33": lambda: nx.complete_bipartite_graph(3, 3),
        "prism": lambda: nx.circular_ladder_graph(3),
        "cube": lambda: nx.hypercube_graph(3),
        "petersen": nx.petersen_graph,
    }
    if name not in builders:
        raise InputError(f"unknown cubic graph {name!r}; choose from {sorted(builders)}")
    G = nx.convert_node_labels_to_integers(builders[name](), ordering="sorted")
    return Graph(G.number_of_nodes(), tuple(sorted((min(u, v), max(u, v)) for u, v in G.edges())))
