import csv
import subprocess
import sys

import pytest

from greenbridges.bench import CSV_HEADER, Cell, cells, load_graph, read_rows, run_benchmark
from greenbridges.generators import random_points, rng_graph
from greenbridges.graph import Instance
from greenbridges.io import parse_config_text, write_instance
from greenbridges.plotting import render_figures, write_plot_script

CONFIG = "graph=rng:60:3\ntype=face\nr=2,4\nseed=1,2\nsolvers=apx,mwm,generic\n"


@pytest.fixture(scope="module")
def bench_csv(tmp_path_factory):
    out = tmp_path_factory.mktemp("bench") / "out.csv"
    rows = run_benchmark(parse_config_text(CONFIG), str(out), time_limit_ms=30_000)
    return out, rows


def test_row_count_and_header(bench_csv):
    out, rows = bench_csv
    assert rows == 12
    data = read_rows(out)
    assert len(data) == 12
    assert tuple(data[0]) == CSV_HEADER
    assert [r["solver"] for r in data[:3]] == ["apx", "mwm", "generic"]


def test_ratios_reference_the_optimum(bench_csv):
    for row in read_rows(bench_csv[0]):
        if row["solver"] in ("mwm", "generic"):
            assert row["status"] == "optimal" and row["quality_ratio"] == "1"
        else:
            assert row["lower_bound"] == "" and row["quality_ratio"]


def test_parallel_matches_serial(bench_csv, tmp_path):
    out = tmp_path / "par.csv"
    run_benchmark(parse_config_text(CONFIG), str(out), time_limit_ms=30_000, workers=2)
    strip = lambda rows: [{k: v for k, v in r.items() if not k.endswith("_ms")} for r in rows]
    assert strip(read_rows(out)) == strip(read_rows(bench_csv[0]))


def test_timeout_rows_carry_lower_bound(tmp_path):
    out = tmp_path / "t.csv"
    cfg = parse_config_text("graph=rng:300:1\ntype=face\nr=30\nseed=0\nsolvers=generic\n")
    run_benchmark(cfg, str(out), time_limit_ms=1)
    (row,) = read_rows(out)
    assert row["status"] == "timeout_incumbent"
    assert row["lower_bound"] != "" and int(row["lower_bound"]) <= int(row["cost"])


def test_unsupported_rows(tmp_path):
    out = tmp_path / "u.csv"
    cfg = parse_config_text("graph=rng:150:2\ntype=walk\nr=3\nq=4\nseed=0\nsolvers=mwm,apx\n")
    run_benchmark(cfg, str(out))
    rows = read_rows(out)
    assert rows[0]["status"] == "unsupported_habitats" and rows[0]["cost"] == ""


def test_cells_and_ids():
    cfg = parse_config_text("graph=g.txt\ntype=face,cycle\nr=3\nq=5,6\nseed=0\nsolvers=apx\n")
    ids = [c.instance_id for c in cells(cfg)]
    assert ids == ["g.txt-face-r3-s0", "g.txt-cycle-r3-q5-s0", "g.txt-cycle-r3-q6-s0"]
    assert Cell("x", "walk", 2, 4, 9).instance_id == "x-walk-r2-q4-s9"


def test_load_graph_from_file(tmp_path):
    pts = random_points(30, 0)
    g = rng_graph(pts)
    path = tmp_path / "g.txt"
    write_instance(path, Instance.unit(g, []), pts)
    g2, pts2 = load_graph(str(path))
    assert g2 == g and list(pts2) == list(pts)


def test_csv_is_rfc4180(bench_csv):
    raw = bench_csv[0].read_bytes()
    assert raw.count(b"\r\n") == 13
    with open(bench_csv[0], newline="") as fh:
        assert all(len(r) == len(CSV_HEADER) for r in csv.reader(fh))


def test_figures_and_script(bench_csv, tmp_path):
    paths = render_figures(str(bench_csv[0]), str(tmp_path / "fig"))
    assert all(open(p, "rb").read(4) == b"\x89PNG" for p in paths)
    script = write_plot_script(str(tmp_path / "plot.py"), str(bench_csv[0]), str(tmp_path / "fig2"))
    done = subprocess.run([sys.executable, script], capture_output=True, text=True, check=True)
    assert len(done.stdout.split()) == 3
