"""Rotation systems from straight-line drawings and face enumeration."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, HabitatKind, classify_habitat

Coordinates = Sequence[tuple[float, float]]


class DegenerateGeometryError(ValueError):
    pass


class EmbeddingError(ValueError):
    pass


@dataclass(frozen=True)
class Embedding:
    # rotation[v]: incident edge indices, counterclockwise by angle
    rotation: tuple[tuple[int, ...], ...]
    coords: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class Face:
    boundary: tuple[int, ...]
    edge_indices: frozenset[int]
    is_outer: bool
    area: float  # signed; inner faces are positive

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.boundary)

    @property
    def is_simple_cycle(self) -> bool:
        return len(self.boundary) >= 3 and len(set(self.boundary)) == len(self.boundary)


def check_coordinates(g: Graph, coords: Coordinates) -> tuple[tuple[float, float], ...]:
    if len(coords) != g.vertex_count:
        raise ValueError(f"expected {g.vertex_count} coordinate pairs, got {len(coords)}")
    out = []
    for x, y in coords:
        x, y = float(x), float(y)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ValueError("coordinates must be finite")
        out.append((x, y))
    return tuple(out)


def rotation_system_from_coordinates(g: Graph, coords: Coordinates) -> Embedding:
    """Order the edges around every vertex by the polar angle of the neighbour.

    The drawing is assumed to be crossing-free; this is not checked.
    """
    pts = check_coordinates(g, coords)
    rotation = []
    for v in range(g.vertex_count):
        x0, y0 = pts[v]
        keyed = []
        for k in g.incidence[v]:
            x1, y1 = pts[g.other(k, v)]
            if x1 == x0 and y1 == y0:
                raise DegenerateGeometryError(f"edge {k} joins two coincident points")
            keyed.append((math.atan2(y1 - y0, x1 - x0), k))
        keyed.sort()
        rotation.append(tuple(k for _, k in keyed))
    return Embedding(tuple(rotation), pts)


def _signed_area(pts, boundary) -> float:
    s = 0.0
    n = len(boundary)
    for i in range(n):
        x1, y1 = pts[boundary[i]]
        x2, y2 = pts[boundary[(i + 1) % n]]
        s += x1 * y2 - x2 * y1
    return s / 2.0


def enumerate_faces(g: Graph, emb: Embedding) -> list[Face]:
    """Trace every face walk of the rotation system.

    Each directed edge lies on exactly one walk. Walks keep their face on the
    left, so bounded faces come out counterclockwise. In every connected
    component the walk of largest absolute area (ties: longest) is the outer
    one.
    """
    rot = emb.rotation
    if len(rot) != g.vertex_count:
        raise EmbeddingError("rotation system does not cover every vertex")
    pos = []
    for v in range(g.vertex_count):
        if sorted(rot[v]) != sorted(g.incidence[v]):
            raise EmbeddingError(f"rotation at vertex {v} does not match its incident edges")
        pos.append({k: i for i, k in enumerate(rot[v])})

    used = set()
    walks = []  # (boundary, edges)
    for k0, (a, b) in enumerate(g.edges):
        for u0, v0 in ((a, b), (b, a)):
            if (u0, v0, k0) in used:
                continue
            boundary = []
            edges = set()
            u, v, k = u0, v0, k0
            while (u, v, k) not in used:
                used.add((u, v, k))
                boundary.append(u)
                edges.add(k)
                # next edge at v: the one preceding k in counterclockwise order
                rv = rot[v]
                k2 = rv[(pos[v][k] - 1) % len(rv)]
                u, v, k = v, g.other(k2, v), k2
            walks.append((tuple(boundary), frozenset(edges)))

    comp_of = {}
    for ci, comp in enumerate(g.components()):
        for v in comp:
            comp_of[v] = ci
    areas = [_signed_area(emb.coords, bd) for bd, _ in walks]
    outer = {}
    for i, (bd, _) in enumerate(walks):
        ci = comp_of[bd[0]]
        key = (abs(areas[i]), len(bd))
        if ci not in outer or key > outer[ci][0]:
            outer[ci] = (key, i)
    outer_idx = {i for _, i in outer.values()}
    return [Face(bd, es, i in outer_idx, areas[i]) for i, (bd, es) in enumerate(walks)]


def inner_faces(faces: Iterable[Face]) -> list[Face]:
    return [f for f in faces if not f.is_outer]


def is_face_habitat(faces: Iterable[Face], h: Iterable[int]) -> bool:
    hs = frozenset(h)
    return any(not f.is_outer and f.is_simple_cycle and f.vertex_set == hs for f in faces)


def cycle_faces(g: Graph, faces: Iterable[Face]) -> list[Face]:
    """Inner faces whose boundary is a simple cycle inducing a cycle in ``g``."""
    return [f for f in faces
            if not f.is_outer and f.is_simple_cycle
            and classify_habitat(g, f.boundary) is HabitatKind.CYCLE]


def face_counts(g: Graph, faces: Sequence[Face]) -> dict[str, int]:
    inner = sum(1 for f in faces if not f.is_outer)
    return {"walks": len(faces), "inner": inner, "components": len(g.components())}
