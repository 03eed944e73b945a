import json
import subprocess
import sys

import pytest

from coxchains.cli import main


def run(*argv):
    return main(list(argv))


def test_gen_b2(tmp_path):
    assert run("gen", "--type", "B2", "--out", str(tmp_path)) == 0
    roots = json.loads((tmp_path / "roots.json").read_text())
    weak = json.loads((tmp_path / "weak-order.json").read_text())
    assert len(roots["positives"]) == 4
    assert weak["n"] == 8 and len(weak["elements"]) == 8
    dot = (tmp_path / "weak-order.dot").read_text()
    assert dot.startswith("digraph") and "dir=forward" in dot


def test_mg_a4(tmp_path):
    assert run("mg", "--type", "A4", "--coxeter", "linear", "--out", str(tmp_path)) == 0
    data = json.loads((tmp_path / "mg.json").read_text())
    assert len(data["classes"]) == 62 and data["is_poset"]


def test_cambrian_verbs(tmp_path):
    out = str(tmp_path)
    assert run("cambrian", "quotient", "--type", "A3", "--coxeter", "bipartite", "--out", out) == 0
    q = json.loads((tmp_path / "cambrian-213.json").read_text())
    assert q["n"] == 14
    assert run("cambrian", "verify-cstable", "--type", "B3", "--out", out) == 0
    rep = json.loads((tmp_path / "cstable-123.json").read_text())
    assert rep["checked"] == 72 and rep["failures"] == []
    assert run("cambrian", "chain-map", "--type", "A3", "--out", out) == 0
    cm = json.loads((tmp_path / "chain-map-123.json").read_text())
    assert cm["failures"] == [] and cm["summary"]["contraction"]["ok"]


def test_bruhat_verbs(tmp_path):
    out = str(tmp_path)
    assert run("bruhat", "build", "--n", "3", "--out", out) == 0
    data = json.loads((tmp_path / "bruhat-3.json").read_text())
    assert len(data["B2"]["elements"]) == 8
    assert run("bruhat", "map-f", "--n", "3", "--out", out) == 0
    assert run("bruhat", "rhbo", "--n", "3", "--reference", "random", "--seed", "3", "--out", out) == 0
    assert run("bruhat", "rhbo", "--type", "A3", "--out", out) == 0
    assert len(json.loads((tmp_path / "rhbo-3.json").read_text())) == 8


def test_verify_all_a3(tmp_path, capsys):
    assert run("verify-all", "--type", "A3", "--out", str(tmp_path)) == 0
    text = capsys.readouterr().out
    assert "FAIL" not in text and "PASS" in text
    summary = json.loads((tmp_path / "verify-A3.json").read_text())
    assert summary["ok"] and summary["failed"] == 0


def test_experiment(tmp_path):
    assert run("experiment", "c-stable-equivalence", "--type", "B2", "--out", str(tmp_path)) == 0


@pytest.mark.parametrize(
    "argv, code",
    [
        (["gen", "--type", "Q7"], 2),
        (["cambrian", "quotient", "--coxeter", "1,1,2"], 2),
        (["mg", "--reference", "1,2"], 2),
        (["mg", "--max-chains", "0"], 2),
        (["nonsense"], 2),
        (["verify-all", "--jobs", "0"], 2),
        (["mg", "--type", "A4", "--max-chains", "10"], 3),
        (["mg", "--type", "A4", "--max-classes", "10"], 3),
    ],
)
def test_exit_codes(tmp_path, argv, code):
    assert run(*argv, "--out", str(tmp_path)) == code


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "coxchains", "gen", "--type", "A2", "--out", str(tmp_path)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "6 elements" in proc.stdout


def test_determinism_across_jobs(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert run("verify-all", "--type", "A3", "--jobs", "1", "--out", str(a)) == 0
    assert run("verify-all", "--type", "A3", "--jobs", "4", "--out", str(b)) == 0
    assert (a / "verify-A3.json").read_bytes() == (b / "verify-A3.json").read_bytes()
