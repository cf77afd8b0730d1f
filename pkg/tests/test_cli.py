import csv
import json
import math
import subprocess
import sys

import pytest

from cliquechroma import GenParams, Graph, gen_random_graph, read_graph
from cliquechroma import harness
from cliquechroma.cli import main
from cliquechroma.formats import write_graph


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, out


@pytest.fixture
def files(tmp_path):
    k3 = tmp_path / "k3.txt"
    k3.write_text("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    zero = tmp_path / "zero.txt"
    zero.write_text("colors 3 1\n1 0\n2 0\n3 0\n")
    c5 = tmp_path / "c5.txt"
    c5.write_text(write_graph(Graph.cycle(5)))
    kn = tmp_path / "k8.txt"
    kn.write_text(write_graph(Graph.complete(8)))
    return {"k3": k3, "zero": zero, "c5": c5, "k8": kn, "dir": tmp_path}


def test_gen_complete(capsys, tmp_path):
    out = tmp_path / "g.txt"
    assert run(capsys, "gen", "--n", 5, "--p", 1, "--out", out)[0] == 0
    assert read_graph(out.read_text()) == Graph.complete(5)
    man = json.loads((tmp_path / "g.txt.manifest.json").read_text())
    assert man["schema"] == harness.MANIFEST_SCHEMA and man["subcommand"] == "gen"
    assert man["params"]["n"] == 5 and man["outputs"] == [str(out)]


def test_gen_repeatable(capsys, tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    run(capsys, "gen", "--n", 200, "--seed", 9, "--out", a)
    run(capsys, "gen", "--n", 200, "--seed", 9, "--out", b)
    assert a.read_bytes() == b.read_bytes()


def test_gen_1000_band(capsys):
    code, out = run(capsys, "gen", "--n", 1000, "--seed", 42)
    m = read_graph(out).edge_count()
    pairs = 1000 * 999 // 2
    assert code == 0 and abs(m - pairs / 2) <= 3 * math.sqrt(pairs / 4)


def test_verify_violation(capsys, files):
    code, out = run(capsys, "verify", files["k3"], files["zero"])
    rec = json.loads(out)
    assert code == 1 and rec["certificate"] == [1, 2, 3] and rec["schema"].startswith("cliquechroma.")


def test_exact_c5(capsys, files):
    code, out = run(capsys, "exact", files["c5"])
    assert code == 0 and json.loads(out)["chi_c"] == 3


def test_exact_budget_exit(capsys, tmp_path):
    g = tmp_path / "g.txt"
    g.write_text(write_graph(gen_random_graph(GenParams(30, 0.5, 1))))
    assert run(capsys, "exact", g, "--budget-nodes", 3)[0] == 3


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_greedy_then_verify(capsys, tmp_path, seed):
    g, c = tmp_path / "g.txt", tmp_path / "c.txt"
    run(capsys, "gen", "--n", 80, "--seed", seed, "--out", g)
    code, out = run(capsys, "greedy", g, "--coloring-out", c)
    assert code == 0 and json.loads(out)["palette"] >= 2
    assert run(capsys, "verify", g, c)[0] == 0
    code, out = run(capsys, "audit", g, c)
    assert code == 0 and json.loads(out)["outcome"] == "exhausted"


def test_audit_violation(capsys, files):
    code, out = run(capsys, "audit", files["k3"], files["zero"])
    assert code == 1 and json.loads(out)["certificate"] == [1, 2, 3]


def test_bounds_2_16(capsys):
    code, out = run(capsys, "bounds", "--n", 2**16, "--eps", 0.1)
    rec = json.loads(out)
    assert code == 0 and rec["schema"] == "cliquechroma.bounds/1"
    assert rec["values"]["greedy_palette_size"] == 9
    assert rec["values"]["mmp_upper_bound"] == 16
    assert rec["values"]["adversary_palette_size"] == -4
    assert rec["vacuous"]["adversary_palette_size"] is True


def test_bounds_csv(capsys):
    code, out = run(capsys, "bounds", "--n", 1024, "--format", "csv")
    rows = list(csv.DictReader(out.splitlines()))
    assert code == 0 and {r["schema"] for r in rows} == {"cliquechroma.bounds/1"}


def test_bounds_small_n(capsys):
    assert run(capsys, "bounds", "--n", 2)[0] == 2


def test_usage_errors(capsys, tmp_path, files):
    assert run(capsys, "mc", "--n", 64, "--trials", 0)[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["gen"])
    assert e.value.code == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("p edge 2 1\ne 1 1\n")
    assert run(capsys, "greedy", bad)[0] == 2
    assert run(capsys, "greedy", tmp_path / "missing.txt")[0] == 2
    assert run(capsys, "verify", files["k3"], files["zero"], "--format", "csv")[0] == 2
    assert run(capsys, "gen", "--n", 3, "--p", 2)[0] == 2


def test_mc_outputs(capsys, tmp_path):
    out = tmp_path / "mc"
    code, _ = run(capsys, "mc", "--n", 64, "--trials", 50, "--seed", 0, "--out", out)
    assert code == 0
    rows = list(csv.DictReader((out / "trials.csv").read_text().splitlines()))
    assert len(rows) == 50
    assert all(r["schema"] == harness.MC_SCHEMA and r["valid"] == "1" for r in rows)
    assert [int(r["seed"]) for r in rows] == list(range(50))
    summary = json.loads((out / "summary.json").read_text())
    per = summary["per_n"][0]
    assert per["trials"] == 50 and 2 <= per["mean_palette"] <= 8
    man = json.loads((out / "manifest.json").read_text())
    assert man["subcommand"] == "mc" and len(man["outputs"]) == 2


def test_mc_repeatable(capsys, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    run(capsys, "mc", "--n", 20, 40, "--trials", 6, "--seed", 3, "--out", a)
    run(capsys, "mc", "--n", 20, 40, "--trials", 6, "--seed", 3, "--out", b)
    assert (a / "trials.csv").read_bytes() == (b / "trials.csv").read_bytes()
    assert (a / "summary.json").read_bytes() == (b / "summary.json").read_bytes()


def test_mc_exact_and_censoring(capsys):
    code, out = run(capsys, "mc", "--n", 7, "--trials", 4, "--method", "exact")
    assert code == 0 and len(out.splitlines()) == 5
    code, out = run(capsys, "mc", "--n", 30, "--trials", 2, "--method", "exact", "--budget-nodes", 2)
    rows = list(csv.DictReader(out.splitlines()))
    assert code == 3 and all(r["censored"] == "1" for r in rows)
    assert run(capsys, "mc", "--n", 100, "--trials", 1, "--method", "exact")[0] == 2


def test_mc_workers_match_serial():
    serial = harness.run_mc([30, 50], 4, 11)
    parallel = harness.run_mc([30, 50], 4, 11, workers=2)
    assert serial == parallel


def test_budget_env(monkeypatch):
    monkeypatch.setenv("CLIQUECHROMA_BUDGET", "cliques=10,nodes=20")
    assert harness.default_budgets() == {"cliques": 10, "nodes": 20}
    monkeypatch.setenv("CLIQUECHROMA_BUDGET", "77")
    assert harness.default_budgets() == {"cliques": 77, "nodes": 77}
    monkeypatch.setenv("CLIQUECHROMA_BUDGET", "oops")
    with pytest.raises(Exception):
        harness.default_budgets()


def test_budget_env_reaches_cli(capsys, monkeypatch, tmp_path):
    g = tmp_path / "g.txt"
    g.write_text(write_graph(gen_random_graph(GenParams(30, 0.5, 1))))
    monkeypatch.setenv("CLIQUECHROMA_BUDGET", "nodes=3")
    assert run(capsys, "exact", g)[0] == 3


def test_lemma1_threshold_above_y(capsys):
    code, out = run(capsys, "lemma1", "--n", 20, "--y", 5, "--k", 2, "--threshold", 5,
                    "--trials", 30)
    rec = json.loads(out)
    assert code == 0 and rec["fraction"] == 0 and rec["schema"] == "cliquechroma.lemma1/1"


def test_propc_complete(capsys, files):
    code, out = run(capsys, "propc", files["k8"], "--j-max", 3, "--samples", 20,
                    "--threshold", 1)
    rec = json.loads(out)
    assert rec["condition1_failure_rate"] == 1.0 and code == 0


def test_console_script_entry_point(files):
    r = subprocess.run([sys.executable, "-m", "cliquechroma.cli", "verify", str(files["k3"]),
                        str(files["zero"])], capture_output=True, text=True)
    assert r.returncode == 1 and json.loads(r.stdout)["certificate"] == [1, 2, 3]
