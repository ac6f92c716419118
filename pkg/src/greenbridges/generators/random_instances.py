"""Random planar graphs and the face, cycle and walk habitat samplers."""

from __future__ import annotations

from typing import Iterable, Optional, Sequence, Union

import numpy as np
from scipy.spatial import Delaunay, QhullError

from ..graph import Graph, Instance
from ..planar import DegenerateGeometryError, Embedding, Face, cycle_faces, enumerate_faces

DEFAULT_CYCLE_CAP = 100_000
_BRUTE_RNG_LIMIT = 60


class GenerationError(RuntimeError):
    pass


# independent streams per purpose so that, e.g., costs do not echo habitat picks
_POINTS, _COSTS, _FACES, _CYCLES, _WALKS = range(5)


def _rng(seed: int, stream: int) -> np.random.Generator:
    if not 0 <= seed < 2**64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    return np.random.default_rng([int(seed), stream])


def random_points(n: int, seed: int) -> list[tuple[float, float]]:
    """``n`` points uniform in the unit square."""
    if n < 1:
        raise ValueError("need at least one point")
    pts = _rng(seed, _POINTS).random((n, 2))
    return [(float(x), float(y)) for x, y in pts]


def rng_graph(pts: Sequence[tuple[float, float]]) -> Graph:
    """Relative neighbourhood graph: {u, v} is an edge unless some third point
    w has max(d(u, w), d(v, w)) < d(u, v)."""
    P = np.asarray(pts, dtype=float).reshape(-1, 2)
    n = len(P)
    if len(np.unique(P, axis=0)) != n:
        raise DegenerateGeometryError("duplicate points")
    candidates: Iterable[tuple[int, int]]
    if n <= _BRUTE_RNG_LIMIT:
        candidates = [(u, v) for u in range(n) for v in range(u + 1, n)]
    else:
        try:
            tri = Delaunay(P)
        except QhullError:
            candidates = [(u, v) for u in range(n) for v in range(u + 1, n)]
        else:
            # the relative neighbourhood graph is a subgraph of the Delaunay triangulation
            cand = set()
            for s in tri.simplices:
                a, b, c = (int(x) for x in s)
                for u, v in ((a, b), (b, c), (a, c)):
                    cand.add((min(u, v), max(u, v)))
            candidates = sorted(cand)
    edges = []
    for u, v in candidates:
        d = np.sum((P[u] - P[v]) ** 2)
        du = np.sum((P - P[u]) ** 2, axis=1)
        dv = np.sum((P - P[v]) ** 2, axis=1)
        block = np.maximum(du, dv) < d
        block[u] = block[v] = False
        if not block.any():
            edges.append((u, v))
    return Graph(n, tuple(edges))


def assign_costs(g: Graph, seed: int, low: int = 1, high: int = 8) -> tuple[int, ...]:
    return tuple(int(c) for c in _rng(seed, _COSTS).integers(low, high + 1, size=g.edge_count))


def _sample(items: list, r: int, rng: np.random.Generator) -> list:
    if len(items) <= r:
        return list(items)
    idx = sorted(int(i) for i in rng.choice(len(items), size=r, replace=False))
    return [items[i] for i in idx]


def _costs(g: Graph, seed: int, costs: Optional[Sequence[int]]) -> tuple[int, ...]:
    return assign_costs(g, seed) if costs is None else tuple(costs)


def gen_face_instance(g: Graph, emb: Union[Embedding, Sequence[Face]], r: int, seed: int,
                      costs: Optional[Sequence[int]] = None, budget: Optional[int] = None) -> Instance:
    """``r`` distinct inner faces whose boundaries induce cycles (all of them if fewer).

    ``emb`` is an embedding or its already enumerated faces. Costs default to
    ``assign_costs(g, seed)``.
    """
    faces = enumerate_faces(g, emb) if isinstance(emb, Embedding) else emb
    seen = set()
    cand = []
    for f in cycle_faces(g, faces):
        if f.vertex_set not in seen:
            seen.add(f.vertex_set)
            cand.append(f.vertex_set)
    if not cand:
        raise GenerationError("no inner face induces a cycle")
    return Instance(g, _costs(g, seed, costs), tuple(_sample(cand, r, _rng(seed, _FACES))), budget)


def induced_cycles(g: Graph, min_len: int, max_len: int, cap: int = DEFAULT_CYCLE_CAP) -> list[tuple[int, ...]]:
    """Chordless cycles with ``min_len``..``max_len`` vertices.

    Each cycle is reported once, starting at its smallest vertex and heading
    to the smaller of that vertex's two cycle neighbours. Search order is a
    DFS in ascending vertex order, and it stops after ``cap`` cycles.
    """
    adj = [frozenset(g.neighbors(v)) for v in range(g.vertex_count)]
    nbrs = [sorted(a) for a in adj]
    out: list[tuple[int, ...]] = []

    for s in range(g.vertex_count):
        if len(out) >= cap:
            break
        stack = [[s, p1] for p1 in reversed(nbrs[s]) if p1 > s]
        while stack and len(out) < cap:
            path = stack.pop()
            last = path[-1]
            ext = []
            for w in nbrs[last]:
                if w <= s or w in path:
                    continue
                if any(w in adj[x] for x in path[1:-1]):
                    continue
                if w in adj[s]:
                    if min_len <= len(path) + 1 <= max_len and path[1] < w:
                        out.append(tuple(path + [w]))
                        if len(out) >= cap:
                            break
                    continue
                if len(path) + 1 < max_len:
                    ext.append(path + [w])
            stack.extend(reversed(ext))
    return out


def gen_cycle_instance(g: Graph, r: int, q: int, seed: int, costs: Optional[Sequence[int]] = None,
                       cap: int = DEFAULT_CYCLE_CAP, budget: Optional[int] = None) -> Instance:
    """``r`` induced cycles with q-1, q or q+1 vertices (all of them if fewer)."""
    if q < 4:
        raise ValueError("q must be at least 4")
    cycles = induced_cycles(g, q - 1, q + 1, cap)
    if not cycles:
        raise GenerationError(f"no induced cycle with {q - 1}..{q + 1} vertices")
    chosen = _sample(cycles, r, _rng(seed, _CYCLES))
    return Instance(g, _costs(g, seed, costs), tuple(frozenset(c) for c in chosen), budget)


def gen_walk_instance(g: Graph, r: int, q: int, seed: int, costs: Optional[Sequence[int]] = None,
                      retries_per_habitat: int = 100, budget: Optional[int] = None) -> Instance:
    """``r`` self-avoiding random walks, each on q' ∈ {q-1, q, q+1} vertices."""
    if q < 3:
        raise ValueError("q must be at least 3")
    if g.vertex_count == 0:
        raise GenerationError("empty graph")
    rng = _rng(seed, _WALKS)
    nbrs = [sorted(g.neighbors(v)) for v in range(g.vertex_count)]
    budget_left = retries_per_habitat * r
    habitats = []
    while len(habitats) < r:
        size = int(rng.integers(q - 1, q + 2))
        while True:
            walk = [int(rng.integers(g.vertex_count))]
            seen = {walk[0]}
            while len(walk) < size:
                opts = [w for w in nbrs[walk[-1]] if w not in seen]
                if not opts:
                    break
                w = opts[int(rng.integers(len(opts)))]
                walk.append(w)
                seen.add(w)
            if len(walk) == size:
                habitats.append(frozenset(walk))
                break
            budget_left -= 1
            if budget_left < 0:
                raise GenerationError("random walks kept running into dead ends")
    return Instance(g, _costs(g, seed, costs), tuple(habitats), budget)
