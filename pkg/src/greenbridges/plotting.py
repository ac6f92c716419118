"""Figures from a benchmark CSV, plus a generated script that redraws them."""

from __future__ import annotations

import os
from collections import defaultdict
from fractions import Fraction
from statistics import median

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .bench import read_rows  # noqa: E402


def _solver_order(rows) -> list[str]:
    seen: dict[str, None] = {}
    for row in rows:
        seen.setdefault(row["solver"], None)
    return list(seen)


def runtime_figure(rows, path: str) -> str:
    """Box plot of solve times per solver (log scale)."""
    solvers = _solver_order(rows)
    data = [[max(float(r["wall_time_ms"]), 1e-3) for r in rows
             if r["solver"] == s and r["wall_time_ms"] and r["status"] != "unsupported_habitats"]
            for s in solvers]
    keep = [(s, d) for s, d in zip(solvers, data) if d]
    fig, ax = plt.subplots(figsize=(6, 4))
    if keep:
        ax.boxplot([d for _, d in keep])
        ax.set_xticks(range(1, len(keep) + 1), [s for s, _ in keep])
        ax.set_yscale("log")
    ax.set_ylabel("solve time [ms]")
    ax.set_title("Running time per solver")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def runtime_by_r_figure(rows, path: str) -> str:
    """Median solve time against the number of habitats."""
    series: dict[str, dict[int, list[float]]] = defaultdict(lambda: defaultdict(list))
    for row in rows:
        if row["wall_time_ms"] and row["status"] != "unsupported_habitats":
            series[row["solver"]][int(row["r"])].append(float(row["wall_time_ms"]))
    fig, ax = plt.subplots(figsize=(6, 4))
    for s in _solver_order(rows):
        if s in series:
            rs = sorted(series[s])
            ax.plot(rs, [max(median(series[s][r]), 1e-3) for r in rs], marker="o", label=s)
    ax.set_yscale("log")
    ax.set_xlabel("habitats r")
    ax.set_ylabel("median solve time [ms]")
    if series:
        ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def quality_figure(rows, path: str, solver: str = "apx") -> str:
    """Approximation quality ratio against the intersection rate."""
    pts = [(float(Fraction(r["lambda"])), float(Fraction(r["quality_ratio"])), r["habitat_type"])
           for r in rows if r["solver"] == solver and r["quality_ratio"] and r["lambda"]]
    fig, ax = plt.subplots(figsize=(6, 4))
    for kind in sorted({k for _, _, k in pts}):
        xs = [x for x, _, k in pts if k == kind]
        ys = [y for _, y, k in pts if k == kind]
        ax.scatter(xs, ys, label=kind, s=14)
    ax.set_xlabel("intersection rate")
    ax.set_ylabel(f"{solver} cost / optimum")
    if pts:
        ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_figures(csv_path: str, out_dir: str) -> list[str]:
    rows = read_rows(csv_path)
    os.makedirs(out_dir, exist_ok=True)
    return [
        runtime_figure(rows, os.path.join(out_dir, "runtime.png")),
        runtime_by_r_figure(rows, os.path.join(out_dir, "runtime_by_r.png")),
        quality_figure(rows, os.path.join(out_dir, "apx_quality.png")),
    ]


_SCRIPT = '''#!/usr/bin/env python3
"""Redraw the benchmark figures: python3 {name} [CSV] [OUT_DIR]"""
import sys

from greenbridges.plotting import render_figures

csv_path = sys.argv[1] if len(sys.argv) > 1 else {csv!r}
out_dir = sys.argv[2] if len(sys.argv) > 2 else {out!r}
for path in render_figures(csv_path, out_dir):
    print(path)
'''


def write_plot_script(path: str, csv_path: str, out_dir: str) -> str:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(_SCRIPT.format(name=os.path.basename(path), csv=os.path.abspath(csv_path),
                                out=os.path.abspath(out_dir)))
    os.chmod(path, 0o755)
    return path
