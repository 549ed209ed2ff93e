import json
import subprocess
import sys

import pytest

from minhess.cli import hessenberg_functions_for, main

KNOWN_P = "1 + 4t^2 + 9t^4 + 15t^6 + 20t^8 + 21t^10 + 16t^12 + 8t^14 + 2t^16"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_poincare_text(capsys):
    code, out, _ = run(capsys, "poincare", "--n", "5", "--hess", "2,4,5,5,5", "--format", "text")
    assert code == 0 and out == KNOWN_P + "\n"
    code, out, _ = run(capsys, "poincare", "--n", "5", "--hess", "2,4,5,5,5", "--q", "--oracle")
    assert code == 0 and out.strip() == "1 + 2t^2 + 3t^4 + 4t^6 + 4t^8 + 2t^10"


def test_poincare_json(capsys):
    code, out, _ = run(capsys, "poincare", "--n", "3", "--hess", "1,2,3", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["n"] == 3 and data["h"] == [1, 2, 3]
    assert data["poincare"] == [[0, 1], [2, 2]]
    assert data["euler"] == 3 and data["dimension"] == 1


def test_scalar_commands(capsys):
    assert run(capsys, "euler", "--n", "5", "--hess", "2,4,5,5,5", "--oracle")[1] == "96\n"
    assert run(capsys, "dimension", "--n", "5", "--hess", "2,4,5,5,5", "--oracle")[1] == "8\n"
    code, out, _ = run(capsys, "fixed-points", "--n", "3", "--hess", "1,2,3", "--oracle")
    assert code == 0 and out.splitlines() == ["1 2 3", "1 3 2", "2 1 3"]


def test_components(capsys):
    code, out, _ = run(capsys, "components", "--n", "8", "--hess", "2,2,3,5,6,6,7,8", "--oracle")
    assert code == 0
    assert out.splitlines() == [
        "8 1 7 6 5 4 3 2",
        "7 6 5 8 1 4 3 2",
        "7 6 5 4 8 1 3 2",
        "7 6 5 4 3 2 1 8",
    ]
    code, out, _ = run(capsys, "components", "--n", "3", "--hess", "1,2,3", "--format", "json")
    assert json.loads(out) == [
        {"corner": [1, 2], "word": [1, 3, 2], "dimension": 1},
        {"corner": [2, 3], "word": [2, 1, 3], "dimension": 1},
    ]


def test_gkm_outputs(capsys):
    code, out, _ = run(capsys, "gkm", "--n", "3", "--hess", "2,3,3", "--format", "dot")
    assert code == 0 and out.count(" -- ") == 6 and out.startswith("graph")
    code, out, _ = run(capsys, "gkm", "--n", "3", "--hess", "2,3,3", "--format", "json")
    assert len(json.loads(out)["edges"]) == 6
    code, out, _ = run(capsys, "gkm-dim", "--n", "3", "--hess", "2,3,3", "--degree", "2", "--oracle")
    assert code == 0 and out == "9\n"


def test_cohomology(capsys):
    code, out, _ = run(
        capsys, "cohomology", "--n", "3", "--hess", "1,2,3",
        "--hilbert", "--multiplication-table", "--tanisaki", "--format", "json",
    )
    data = json.loads(out)
    assert code == 0
    assert data["basis"] == ["1 2 3", "1 3 2", "2 1 3"]
    assert data["hilbert"] == [[0, 1], [2, 2]] and data["dimension"] == 3
    assert data["tanisaki"]["ok"]
    assert {"u": "1 2 3", "v": "1 3 2", "product": [["1 3 2", "1"]]} in data["table"]


def test_check_all_h(capsys):
    code, out, _ = run(capsys, "check", "--n", "4", "--all-h")
    assert code == 0 and out.strip() == "n=4: 14/14 Hessenberg functions pass"


def test_sweep_report(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "sweep", "--n", "3", "--out", str(path))
    report = json.loads(path.read_text())
    assert code == 0 and report["ok"] and report["count"] == 5
    assert [r["h"] for r in report["results"]] == [
        [1, 2, 3], [1, 3, 3], [2, 2, 3], [2, 3, 3], [3, 3, 3]
    ]
    code, out, _ = run(capsys, "sweep", "--n", "2")
    assert [r["h"] for r in json.loads(out)["results"]] == [[1, 2], [2, 2]]


def test_sampling_is_seeded():
    a = hessenberg_functions_for(7, 1)
    assert a == hessenberg_functions_for(7, 1) and len(a) == 50
    assert a != hessenberg_functions_for(7, 2)
    assert [h.values for h in a] == sorted(h.values for h in a)


@pytest.mark.parametrize(
    "argv",
    [
        ["poincare", "--n", "3", "--hess", "2,1,3"],
        ["poincare", "--n", "3", "--hess", "1,2,4"],
        ["poincare", "--n", "3", "--hess", "a,b,c"],
        ["poincare", "--n", "4", "--hess", "1,2,3"],
        ["poincare", "--n", "1", "--hess", "1"],
        ["poincare", "--n", "3"],
        ["euler", "--n", "3", "--hess", "1,2,3", "--format", "dot"],
        ["fixed-points", "--n", "10", "--hess", "10,10,10,10,10,10,10,10,10,10"],
        ["gkm-dim", "--n", "3", "--hess", "1,2,3", "--degree", "9"],
        ["sweep", "--n", "12"],
        ["frobnicate", "--n", "3"],
        [],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2


def test_closed_forms_skip_the_guard(capsys):
    code, out, _ = run(capsys, "euler", "--n", "12", "--hess", ",".join(["12"] * 12))
    assert code == 0 and int(out) > 0


def test_deterministic_output():
    cmd = [sys.executable, "-m", "minhess", "sweep", "--n", "4"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and json.loads(first)["ok"]


def test_module_entry_point_exit_code():
    proc = subprocess.run(
        [sys.executable, "-m", "minhess", "poincare", "--n", "3", "--hess", "3,2,3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2 and "invalid Hessenberg function" in proc.stderr


def test_failure_exit_1(monkeypatch, capsys):
    from minhess import betti

    monkeypatch.setattr(betti, "poincare_bruteforce", lambda h: betti.UniPoly({0: 7}))
    code, out, _ = run(capsys, "poincare", "--n", "3", "--hess", "1,2,3", "--oracle")
    assert code == 1 and "FAIL" in out
    code, out, _ = run(capsys, "check", "--n", "3", "--all-h", "--keep-going")
    assert code == 1 and out.count("FAIL") == 5
    code, out, _ = run(capsys, "check", "--n", "3", "--all-h")
    assert code == 1 and out.count("FAIL") == 1
