"""Instance, solution and benchmark-config files.

Instance format (0-based indices, ``#`` starts a comment)::

    V n
    C x y        (optional, n lines)
    E m
    u v cost     (m lines)
    H r
    s v1 .. vs   (r lines)
    K k          (optional)

Coordinates are written with ``repr`` so floats survive a round trip exactly.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .graph import Graph, InputError, Instance, Solution

PathLike = Union[str, "os.PathLike[str]"]


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


class ValidationError(InputError):
    pass


# -- instances ---------------------------------------------------------------

def format_instance(inst: Instance, coords: Optional[Sequence[tuple[float, float]]] = None) -> str:
    g = inst.graph
    lines = [f"V {g.vertex_count}"]
    if coords is not None:
        if len(coords) != g.vertex_count:
            raise ValidationError("need one coordinate pair per vertex")
        lines += [f"C {float(x)!r} {float(y)!r}" for x, y in coords]
    lines.append(f"E {g.edge_count}")
    lines += [f"{u} {v} {c}" for (u, v), c in zip(g.edges, inst.costs)]
    lines.append(f"H {len(inst.habitats)}")
    for h in inst.habitats:
        vs = sorted(h)
        lines.append(" ".join(map(str, [len(vs)] + vs)))
    if inst.budget is not None:
        lines.append(f"K {inst.budget}")
    return "\n".join(lines) + "\n"


def write_instance(path: PathLike, inst: Instance, coords: Optional[Sequence[tuple[float, float]]] = None) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_instance(inst, coords))


def _content_lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


class _Reader:
    def __init__(self, text: str):
        self._it = iter(list(_content_lines(text)))
        self.lineno = 0
        self._peeked: Optional[tuple[int, list[str]]] = None

    def peek(self) -> Optional[list[str]]:
        if self._peeked is None:
            self._peeked = next(self._it, None)
        return None if self._peeked is None else self._peeked[1]

    def next(self, what: str) -> list[str]:
        tok = self.peek()
        if tok is None:
            raise ParseError(self.lineno + 1, f"unexpected end of file, expected {what}")
        self.lineno = self._peeked[0]
        self._peeked = None
        return tok

    def header(self, key: str) -> int:
        tok = self.next(f"'{key} <count>'")
        if len(tok) != 2 or tok[0] != key:
            raise ParseError(self.lineno, f"expected '{key} <count>', got {' '.join(tok)!r}")
        return self.integer(tok[1])

    def integer(self, s: str, minimum: int = 0) -> int:
        try:
            v = int(s)
        except ValueError:
            raise ParseError(self.lineno, f"not an integer: {s!r}") from None
        if v < minimum:
            raise ParseError(self.lineno, f"value {v} below {minimum}")
        return v

    def real(self, s: str) -> float:
        try:
            return float(s)
        except ValueError:
            raise ParseError(self.lineno, f"not a number: {s!r}") from None


def parse_instance_text(text: str) -> tuple[Instance, Optional[list[tuple[float, float]]]]:
    rd = _Reader(text)
    n = rd.header("V")
    coords = None
    if (rd.peek() or [None])[0] == "C":
        coords = []
        for _ in range(n):
            tok = rd.next("'C x y'")
            if len(tok) != 3 or tok[0] != "C":
                raise ParseError(rd.lineno, "expected 'C x y'")
            coords.append((rd.real(tok[1]), rd.real(tok[2])))
    m = rd.header("E")
    edges, costs = [], []
    for _ in range(m):
        tok = rd.next("'u v cost'")
        if len(tok) != 3:
            raise ParseError(rd.lineno, "expected 'u v cost'")
        u, v = rd.integer(tok[0]), rd.integer(tok[1])
        c = rd.integer(tok[2], minimum=1)
        if u >= n or v >= n:
            raise ValidationError(f"line {rd.lineno}: vertex index out of range")
        edges.append((u, v))
        costs.append(c)
    r = rd.header("H")
    habitats = []
    for _ in range(r):
        tok = rd.next("'s v1 .. vs'")
        s = rd.integer(tok[0])
        if len(tok) != s + 1:
            raise ParseError(rd.lineno, f"habitat announces {s} vertices but lists {len(tok) - 1}")
        vs = [rd.integer(t) for t in tok[1:]]
        if any(v >= n for v in vs):
            raise ValidationError(f"line {rd.lineno}: vertex index out of range")
        if len(set(vs)) != len(vs):
            raise ValidationError(f"line {rd.lineno}: repeated vertex in habitat")
        if s < 2:
            raise ValidationError(f"line {rd.lineno}: habitats need at least two vertices")
        habitats.append(frozenset(vs))
    budget = None
    tok = rd.peek()
    if tok is not None:
        tok = rd.next("'K k'")
        if len(tok) != 2 or tok[0] != "K":
            raise ParseError(rd.lineno, f"unexpected line {' '.join(tok)!r}")
        budget = rd.integer(tok[1])
        if rd.peek() is not None:
            rd.next("end of file")
            raise ParseError(rd.lineno, "trailing content after budget line")
    try:
        g = Graph(n, tuple(edges))
        inst = Instance(g, tuple(costs), tuple(habitats), budget)
    except InputError as exc:
        raise ValidationError(str(exc)) from exc
    return inst, coords


def parse_instance(path: PathLike) -> tuple[Instance, Optional[list[tuple[float, float]]]]:
    with open(path, encoding="ascii") as fh:
        return parse_instance_text(fh.read())


# -- solutions ---------------------------------------------------------------

def format_solution(sol: Solution) -> str:
    es = sol.sorted_edges()
    return "\n".join([f"F {len(es)}"] + [str(k) for k in es]) + "\n"


def write_solution(path: PathLike, sol: Solution) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_solution(sol))


def parse_solution_text(text: str) -> list[int]:
    rd = _Reader(text)
    s = rd.header("F")
    out = []
    for _ in range(s):
        tok = rd.next("an edge index")
        if len(tok) != 1:
            raise ParseError(rd.lineno, "expected one edge index per line")
        out.append(rd.integer(tok[0]))
    if rd.peek() is not None:
        rd.next("end of file")
        raise ParseError(rd.lineno, "trailing content after solution")
    if len(set(out)) != len(out):
        raise ValidationError("repeated edge index in solution")
    return out


def parse_solution(path: PathLike) -> list[int]:
    with open(path, encoding="ascii") as fh:
        return parse_solution_text(fh.read())


# -- benchmark config --------------------------------------------------------

_LIST_KEYS = {"graph", "type", "r", "q", "seed", "solvers"}
_INT_LISTS = {"r", "q", "seed"}


@dataclass
class BenchConfig:
    graphs: list[str] = field(default_factory=list)
    types: list[str] = field(default_factory=list)
    r: list[int] = field(default_factory=list)
    q: list[int] = field(default_factory=list)
    seeds: list[int] = field(default_factory=list)
    solvers: list[str] = field(default_factory=list)
    time_limit_ms: Optional[int] = None
    workers: int = 1

    def validate(self) -> "BenchConfig":
        for name in ("graphs", "types", "r", "seeds", "solvers"):
            if not getattr(self, name):
                raise ValidationError(f"config needs at least one {name.rstrip('s')} entry")
        bad = set(self.types) - {"face", "cycle", "walk"}
        if bad:
            raise ValidationError(f"unknown habitat types {sorted(bad)}")
        if {"cycle", "walk"} & set(self.types) and not self.q:
            raise ValidationError("cycle and walk habitats need q entries")
        if self.workers < 1:
            raise ValidationError("workers must be positive")
        return self


def parse_config_text(text: str) -> BenchConfig:
    """``key=value`` lines; list keys may repeat and also accept comma lists."""
    cfg = BenchConfig()
    attr = {"graph": "graphs", "type": "types", "seed": "seeds"}
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(no, f"expected key=value, got {line!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if key in _LIST_KEYS:
            items = [v.strip() for v in value.split(",") if v.strip()]
            if key in _INT_LISTS:
                try:
                    items = [int(v) for v in items]
                except ValueError:
                    raise ParseError(no, f"{key} needs integers") from None
            getattr(cfg, attr.get(key, key)).extend(items)
        elif key in ("time_limit_ms", "workers"):
            try:
                setattr(cfg, key, int(value))
            except ValueError:
                raise ParseError(no, f"{key} needs an integer") from None
        else:
            raise ParseError(no, f"unknown key {key!r}")
    return cfg.validate()


def parse_config(path: PathLike) -> BenchConfig:
    with open(path, encoding="utf-8") as fh:
        return parse_config_text(fh.read())
