import subprocess
import sys

import pytest

from wtss.cli import main
from wtss.graph import load_graph

DIAMOND = "n 4\ns 0\ne 0 1 1\ne 0 2 1\ne 1 3 1\ne 2 3 1\n"


@pytest.fixture
def files(tmp_path):
    (tmp_path / "d.g").write_text(DIAMOND)
    (tmp_path / "tree.g").write_text("n 4\ns 0\ne 0 1 1\ne 0 2 1\ne 1 3 1\n")
    return tmp_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_build_then_verify(files, capsys):
    code, _, _ = run(capsys, "build", "--k", 1, "--input", files / "d.g", "--output", files / "h.g")
    assert code == 0
    assert load_graph((files / "h.g").read_text()).m == 4
    assert (files / "h.g.stats").read_text() == "edges 4\nmax_indegree 2\nbound 5\n"
    code, out, _ = run(capsys, "verify", "--k", 1, "-i", files / "d.g", "-H", files / "h.g")
    assert (code, out) == (0, "ok\n")


def test_verify_prints_counterexample(files, capsys):
    code, out, _ = run(capsys, "verify", "--k", 1, "-i", files / "d.g", "-H", files / "tree.g")
    assert code == 1
    assert out == "increment 0=1\ntarget 3\ndist_g 2\ndist_h 3\n"
    code, out, _ = run(capsys, "verify-t", "--k", 1, "-t", 1, "-i", files / "d.g",
                       "-H", files / "tree.g")
    assert code == 0


def test_build_t_to_stdout(files, capsys):
    code, out, _ = run(capsys, "build-t", "--k", 2, "-t", 3, "-i", files / "d.g")
    assert code == 0 and load_graph(out).m == 4


def test_gen_tree(files, capsys):
    out_g = files / "t.g"
    code, _, _ = run(capsys, "gen", "--family", "tree", "--k", 2, "--size", 10, "-o", out_g)
    assert code == 0
    g = load_graph(out_g.read_text())
    assert g.m == 58  # the closed form says 60; see the witness file header
    wit = (files / "t.g.wit").read_text().splitlines()
    assert wit[0].startswith("# closed form")
    assert sum(1 for line in wit if line.startswith("wit path:")) == 50


def test_necessity_with_witnesses(files, capsys):
    g = files / "r.g"
    run(capsys, "gen", "--family", "rational-increment", "--size", 6, "-o", g)
    code, _, err = run(capsys, "necessity", "--k", 1, "-i", g, "-w", f"{g}.wit")
    assert code == 2 and "total 2 > 1" in err
    code, out, _ = run(capsys, "necessity", "--k", 2, "-i", g, "-w", f"{g}.wit")
    assert code == 0 and out.count("NECESSARY") == 8
    run(capsys, "gen", "--family", "rational-increment", "--size", 6, "--rescale", "-o", g)
    code, out, _ = run(capsys, "necessity", "--k", 1, "-i", g, "-w", f"{g}.wit")
    assert code == 0


def test_necessity_reports_unproven_edge(files, capsys):
    (files / "p.g").write_text("n 2\ne 0 1 1\ne 0 1 5\n")
    code, out, _ = run(capsys, "necessity", "--k", 1, "-i", files / "p.g")
    assert code == 1
    assert out.splitlines()[1] == "edge 1 NOT-PROVEN"


def test_transform_dist_cut(files, capsys):
    code, _, _ = run(capsys, "transform", "-i", files / "d.g", "-o", files / "x.g")
    assert code == 0
    assert (files / "x.g.map").read_text().startswith("map 0 ")
    code, out, _ = run(capsys, "dist", "-i", files / "d.g")
    assert out == "0 0\n1 1\n2 1\n3 2\n"
    code, out, _ = run(capsys, "dist", "-i", files / "d.g", "--source", 3, "-t", 0)
    assert out == "0 inf\n"
    code, out, _ = run(capsys, "cut", "-i", files / "d.g", "-t", 3)
    assert out == "value 2\ncut 2 3\nA 0 1 2\nB 3\n"


def test_stats_enforces_bound(files, capsys):
    code, out, _ = run(capsys, "stats", "--k", 1, "-i", files / "d.g", "-H", files / "d.g")
    assert code == 0 and out == "edges 4\nmax_indegree 2\nbound 5\n"
    star = "n 7\n" + "".join(f"e {v} 6 1\n" for v in range(6)) + \
        "".join(f"e 0 {v} 0\n" for v in range(1, 6))
    (files / "star.g").write_text(star)
    code, out, _ = run(capsys, "stats", "--k", 1, "-i", files / "star.g", "-H", files / "star.g")
    assert code == 1 and "violation" in out


@pytest.mark.parametrize("argv", [
    [],
    ["build", "--k", "0", "-i", "x"],
    ["build", "--k", "1"],
    ["gen", "--family", "nope", "--size", "3"],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == 2


def test_input_errors(files, capsys):
    (files / "bad.g").write_text("n 2\ne 0 1 x\n")
    code, _, err = run(capsys, "dist", "-i", files / "bad.g")
    assert code == 2 and "line 2" in err
    code, _, err = run(capsys, "dist", "-i", files / "missing.g")
    assert code == 2
    (files / "neg.g").write_text("n 2\ne 0 1 1\ne 1 0 -3\n")
    assert run(capsys, "dist", "-i", files / "neg.g")[0] == 2
    (files / "frac.g").write_text("n 2\ne 0 1 1/2\n")
    assert run(capsys, "build", "--k", 1, "-i", files / "frac.g")[0] == 2
    assert run(capsys, "build-t", "--k", 1, "-t", 0, "-i", files / "tree.g",
               "--source", 3)[0] == 2
    assert run(capsys, "gen", "--family", "tree", "--k", 1, "--size", 3)[0] == 2


def test_module_entry_point(files):
    out = subprocess.run([sys.executable, "-m", "wtss.cli", "dist", "-i", str(files / "d.g")],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout == "0 0\n1 1\n2 1\n3 2\n"
