"""Shared fixtures and small-instance generators for the test suite."""

from __future__ import annotations

import random

from greenbridges.generators import (GenerationError, gen_cycle_instance, gen_face_instance,
                                     gen_walk_instance, induced_cycles, random_points, rng_graph)
from greenbridges.graph import Graph, Instance
from greenbridges.planar import rotation_system_from_coordinates

# guards shared by the oracle-based checks
MAX_VERTICES = 10
MAX_COVERED = 18
MAX_HABITATS = 4


def two_triangles(costs=(1, 1, 1, 1, 1)) -> Instance:
    """Triangles {0,1,2} and {0,1,3} sharing the edge 01."""
    g = Graph(4, ((0, 1), (0, 2), (1, 2), (0, 3), (1, 3)))
    return Instance(g, costs, (frozenset({0, 1, 2}), frozenset({0, 1, 3})))


def square_with_diagonal() -> Instance:
    g = Graph(4, ((0, 1), (1, 2), (2, 3), (3, 0), (0, 2)))
    return Instance(g, (3, 1, 2, 5, 4), (frozenset({0, 1, 2}), frozenset({0, 2, 3}), frozenset({0, 1, 2, 3})))


def small_rng_instance(seed: int) -> tuple[Instance, str]:
    """Random face, cycle or walk instance on an RNG graph within the oracle guards."""
    rnd = random.Random(seed)
    salt = seed
    while True:
        n = rnd.randint(4, MAX_VERTICES)
        pts = random_points(n, salt)
        g = rng_graph(pts)
        kind = rnd.choice(("face", "cycle", "walk"))
        r = rnd.randint(1, MAX_HABITATS)
        try:
            if kind == "face":
                inst = gen_face_instance(g, rotation_system_from_coordinates(g, pts), r, salt)
            elif kind == "cycle":
                inst = gen_cycle_instance(g, r, rnd.choice((4, 5)), salt)
            else:
                inst = gen_walk_instance(g, r, rnd.choice((3, 4, 5)), salt)
        except GenerationError:
            salt += 1_000_003
            continue
        if len(inst.covered_edges) <= MAX_COVERED:
            return inst, kind
        salt += 1_000_003


def random_graph(rnd: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < p]
    return Graph(n, tuple(edges))


def small_cycle_instance(seed: int, max_habitats: int = MAX_HABITATS) -> Instance:
    """Random graph whose habitats are induced cycles; within the oracle guards.

    Unlike RNG graphs these have chords and shared edges in three or more
    habitats, which exercises the hypergraph side of the matching solvers.
    """
    rnd = random.Random(seed)
    while True:
        n = rnd.randint(4, MAX_VERTICES)
        g = random_graph(rnd, n, rnd.uniform(0.25, 0.6))
        cycles = induced_cycles(g, 3, n)
        if not cycles:
            continue
        r = rnd.randint(1, min(max_habitats, len(cycles)))
        habitats = [frozenset(c) for c in rnd.sample(cycles, r)]
        inst = Instance(g, tuple(rnd.randint(1, 8) for _ in range(g.edge_count)), tuple(habitats))
        if len(inst.covered_edges) <= MAX_COVERED:
            return inst


def k4_instance(seed: int) -> Instance:
    """Maximum degree three, triangle habitats, at least one K4 component with
    a vertex in three habitats. Other components are triangles, diamonds or
    K4s with fewer habitats."""
    rnd = random.Random(seed)
    edges: list[tuple[int, int]] = []
    habitats: list[frozenset[int]] = []
    n = 0

    def k4(triangles: int):
        nonlocal n
        vs = list(range(n, n + 4))
        n += 4
        edges.extend((vs[i], vs[j]) for i in range(4) for j in range(i + 1, 4))
        tris = [frozenset(vs) - {v} for v in vs]
        habitats.extend(rnd.sample(tris, triangles))

    def diamond():
        nonlocal n
        a, b, c, d = range(n, n + 4)
        n += 4
        edges.extend([(a, b), (a, c), (b, c), (a, d), (b, d)])
        habitats.extend([frozenset({a, b, c}), frozenset({a, b, d})])

    def triangle():
        nonlocal n
        a, b, c = range(n, n + 3)
        n += 3
        edges.extend([(a, b), (b, c), (a, c)])
        habitats.append(frozenset({a, b, c}))

    first = rnd.choice((3, 4))
    k4(first)
    room = MAX_HABITATS - first
    if room >= 2 and rnd.random() < 0.5:
        diamond() if rnd.random() < 0.5 else k4(2)
    elif room >= 1 and rnd.random() < 0.7:
        triangle() if rnd.random() < 0.5 else k4(1)
    # an isolated edge keeps some vertices out of every habitat
    if n <= MAX_VERTICES - 2 and rnd.random() < 0.5:
        edges.append((n, n + 1))
        n += 2
    g = Graph(n, tuple(edges))
    return Instance(g, tuple(rnd.randint(1, 8) for _ in edges), tuple(habitats))
