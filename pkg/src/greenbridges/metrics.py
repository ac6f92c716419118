"""Evaluation metrics: intersection rate, approximation ratios, runtime summaries."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Union

from .graph import Instance, IntegrityError

Number = Union[int, Fraction]


class UndefinedMetricError(ValueError):
    pass


def intersection_rate(inst: Instance) -> Fraction:
    """Average number of habitats per habitat-covered edge:
    Σ_H |E(G[H])| divided by |∪_H E(G[H])|."""
    covered = inst.covered_edges
    if not covered:
        raise UndefinedMetricError("no habitat covers an edge")
    return Fraction(sum(len(es) for es in inst.habitat_edges), len(covered))


class Ratios(NamedTuple):
    quality: Fraction
    additive: Fraction


def average_edge_cost(opt_cost: int, edge_count: int) -> Fraction:
    if edge_count <= 0:
        raise UndefinedMetricError("optimal solution has no edges")
    return Fraction(opt_cost, edge_count)


def compute_ratios(apx_cost: int, opt_cost: int, r: int, d: Number) -> Ratios:
    """quality = apx / opt and additive = (apx - opt) / (d * r), where d is the
    average edge cost in an optimal solution."""
    if opt_cost <= 0:
        if r > 0:
            raise IntegrityError("optimal cost must be positive when habitats are present")
        raise UndefinedMetricError("ratios need a positive optimum")
    if apx_cost < opt_cost:
        raise IntegrityError(f"approximate cost {apx_cost} is below the optimum {opt_cost}")
    d = Fraction(d)
    if r <= 0 or d <= 0:
        raise UndefinedMetricError("additive ratio needs r > 0 and d > 0")
    return Ratios(Fraction(apx_cost, opt_cost), Fraction(apx_cost - opt_cost) / (d * r))


class Summary(NamedTuple):
    count: int
    minimum: float
    maximum: float
    mean: float
    sd: float  # sample standard deviation, 0 for a single value


def summarize(values: Iterable[float]) -> Summary:
    xs = [float(v) for v in values]
    if not xs:
        raise UndefinedMetricError("nothing to summarize")
    mean = math.fsum(xs) / len(xs)
    sd = math.sqrt(math.fsum((x - mean) ** 2 for x in xs) / (len(xs) - 1)) if len(xs) > 1 else 0.0
    return Summary(len(xs), min(xs), max(xs), mean, sd)


def runtime_ratios(times: dict[str, dict[str, float]], slow: str, fast: str) -> list[float]:
    """Per-instance ``time[slow] / time[fast]`` over instances where both ran.

    ``times`` maps instance id to solver to seconds.
    """
    out = []
    for per in times.values():
        a, b = per.get(slow), per.get(fast)
        if a is not None and b:
            out.append(a / b)
    return out


def format_fraction(x: Optional[Fraction]) -> str:
    if x is None:
        return ""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_fraction(s: str) -> Optional[Fraction]:
    return Fraction(s) if s else None
