import subprocess
import sys

import pytest

from greenbridges.cli import main
from greenbridges.io import parse_instance


@pytest.fixture
def k4_c3(tmp_path):
    def make(p):
        path = tmp_path / f"c3p{p}.txt"
        assert main(["generate", "--kind", "cvc-c3", "--graph", "k4", "--p", str(p), "--out", str(path)]) == 0
        return path
    return make


def test_decision_yes_and_no(k4_c3, capsys):
    assert main(["solve", "--in", str(k4_c3(3)), "--solver", "generic"]) == 0
    out = capsys.readouterr().out
    assert "decision: yes" in out and "cost: 9" in out
    assert main(["solve", "--in", str(k4_c3(2))]) == 1
    assert "decision: no" in capsys.readouterr().out


def test_verify_round_trip(k4_c3, tmp_path, capsys):
    inst = k4_c3(3)
    sol = tmp_path / "sol.txt"
    assert main(["solve", "--in", str(inst), "--solution-out", str(sol)]) == 0
    assert main(["verify", "--in", str(inst), "--solution", str(sol)]) == 0
    lines = sol.read_text().splitlines()
    tampered = tmp_path / "bad.txt"
    tampered.write_text("\n".join([f"F {len(lines) - 2}"] + lines[2:]) + "\n")
    assert main(["verify", "--in", str(inst), "--solution", str(tampered)]) == 1
    bogus = tmp_path / "bogus.txt"
    bogus.write_text("F 1\n999\n")
    assert main(["verify", "--in", str(inst), "--solution", str(bogus)]) == 1
    capsys.readouterr()


def test_generate_is_deterministic(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    for path in (a, b):
        assert main(["generate", "--kind", "face", "--n", "120", "--r", "6", "--seed", "3", "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()
    inst, coords = parse_instance(a)
    assert len(inst.habitats) == 6 and len(coords) == 120
    c = tmp_path / "c.txt"
    assert main(["generate", "--kind", "cycle", "--in", str(a), "--r", "4", "--q", "6", "--seed", "1",
                 "--out", str(c)]) == 0
    assert parse_instance(c)[0].graph == inst.graph


def test_generate_to_stdout(capsys):
    assert main(["generate", "--kind", "crown", "--p", "1", "--q", "3"]) == 0
    assert capsys.readouterr().out.startswith("V ")


def test_exit_codes(tmp_path, capsys):
    assert main(["solve", "--in", str(tmp_path / "missing.txt")]) == 3
    bad = tmp_path / "bad.txt"
    bad.write_text("V 2\nE 1\n0 1 nope\nH 0\n")
    assert main(["solve", "--in", str(bad)]) == 3
    with pytest.raises(SystemExit) as info:
        main(["solve"])
    assert info.value.code == 2
    square = tmp_path / "sq.txt"
    square.write_text("V 4\nE 5\n0 1 1\n1 2 1\n2 3 1\n3 0 1\n0 2 1\nH 1\n4 0 1 2 3\n")
    assert main(["solve", "--in", str(square), "--solver", "mwm"]) == 2
    broken = tmp_path / "broken.txt"
    broken.write_text("V 4\nE 2\n0 1 1\n2 3 1\nH 1\n3 0 1 2\n")
    assert main(["solve", "--in", str(broken)]) == 1
    assert main(["generate", "--kind", "face"]) == 2
    capsys.readouterr()


def test_timeout_exit_code(tmp_path, capsys):
    # every solver keeps an incumbent, so a timeout still reports a solution
    path = tmp_path / "f.txt"
    assert main(["generate", "--kind", "face", "--n", "200", "--r", "20", "--out", str(path)]) == 0
    assert main(["solve", "--in", str(path), "--solver", "generic", "--time-limit-ms", "0"]) == 0
    out = capsys.readouterr().out
    assert "status: timeout_incumbent" in out and "lower_bound:" in out


def test_bench_command(tmp_path, capsys):
    cfg = tmp_path / "cfg.txt"
    cfg.write_text("graph=rng:50:1\ntype=face\nr=3\nseed=0\nsolvers=apx,mwm\n")
    out = tmp_path / "o.csv"
    script = tmp_path / "plot.py"
    assert main(["bench", "--config", str(cfg), "--out-csv", str(out), "--plot-script", str(script),
                 "--figures-dir", str(tmp_path / "figs")]) == 0
    assert "wrote 2 rows" in capsys.readouterr().out
    assert script.exists() and (tmp_path / "figs" / "runtime.png").exists()


def test_module_entry_point():
    done = subprocess.run([sys.executable, "-m", "greenbridges", "--help"], capture_output=True, text=True)
    assert done.returncode == 0 and "generate" in done.stdout
