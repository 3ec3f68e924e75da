import json
import subprocess
import sys

import pytest

from tropbasis.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_fano_json(capsys):
    code, out, _ = run(capsys, "analyze", "fano", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["unique_minimal_basis"] is True
    assert len(rep["minimal_bases"]) == 1 and len(rep["minimal_bases"][0]) == 7
    assert all(len(c) == 3 for c in rep["minimal_bases"][0])
    assert rep["theorem2_satisfied"] is True
    assert rep["cocircuit_recovery_ok"] is True
    assert list(rep)[:4] == ["input_name", "n", "circuit_count", "circuits"]


def test_analyze_u24_text(capsys):
    code, out, _ = run(capsys, "analyze", "uniform:2,4")
    assert code == 0
    assert "unique minimal tropical basis: no" in out
    assert "minimal tropical bases (4):" in out


def test_global_flags_before_command(capsys):
    code, out, _ = run(capsys, "--json", "analyze", "uniform:2,4")
    assert code == 0
    rep = json.loads(out)
    assert rep["unique_minimal_basis"] is False and len(rep["minimal_bases"]) == 4


def test_analyze_broken_file(capsys, tmp_path):
    p = tmp_path / "broken.circuits"
    p.write_text("n 4\n1 2 3\n1 2 4\n")
    code, _, err = run(capsys, "analyze", str(p))
    assert code == 2
    assert "elimination" in err


def test_analyze_non_simple(capsys, tmp_path):
    p = tmp_path / "parallel.circuits"
    p.write_text("n 3\n1 2\n")
    code, _, err = run(capsys, "analyze", str(p))
    assert code == 2 and "not simple" in err


@pytest.mark.parametrize("argv", [
    [], ["bogus"], ["analyze"], ["analyze", "fano", "--nope"],
    ["--threads", "0", "catalog"], ["explore", "--family", "gf7"],
])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 1


def test_unknown_catalog_name(capsys):
    assert run(capsys, "analyze", "petersen")[0] == 2
    assert run(capsys, "catalog", "doubled_line_dual:2")[0] == 2


def test_resource_cap(capsys, tmp_path):
    p = tmp_path / "big.circuits"
    p.write_text("n 21\n1 2 3\n")
    b = tmp_path / "basis.circuits"
    b.write_text("n 21\n1 2 3\n")
    assert run(capsys, "check-basis", str(p), "--basis", str(b))[0] == 3
    code, out, _ = run(capsys, "check-basis", str(p), "--basis", str(b), "--force")
    assert code == 0 and "tropical basis: yes" in out
    assert run(capsys, "explore", "--n-max", "25")[0] == 3
    p.write_text("n 25\n1 2 3\n")
    assert run(capsys, "check-basis", str(p), "--basis", str(b), "--force")[0] == 2
    b.write_text("n 25\n1 2 3\n")
    assert run(capsys, "check-basis", str(p), "--basis", str(b), "--force")[0] == 3


def test_check_basis(capsys, tmp_path):
    b = tmp_path / "b.circuits"
    b.write_text("n 4\n1 2 3\n1 2 4\n")
    code, out, _ = run(capsys, "check-basis", "uniform:2,4", "--basis", str(b), "--json")
    data = json.loads(out)
    assert code == 0
    assert data["is_basis"] is False and data["failure_witness"] == [3, 4]
    assert data["methods_agree"] is True
    b.write_text("n 4\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n")
    code, out, _ = run(capsys, "check-basis", "uniform:2,4", "--basis", str(b))
    assert "redundant member" in out and "minimal: no" in out
    b.write_text("n 4\n1 2\n")
    assert run(capsys, "check-basis", "uniform:2,4", "--basis", str(b))[0] == 2
    assert run(capsys, "check-basis", "uniform:2,4", "--basis",
               str(tmp_path / "missing"))[0] == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "uniform:2,5", "--max-bases", "5", "--json")
    data = json.loads(out)
    assert code == 0 and data["count"] == 5 and data["truncated"] is True
    code, out, _ = run(capsys, "enumerate", "fano")
    assert "minimal tropical bases: 1" in out


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0 and "doubled_line_dual" in out
    code, out, _ = run(capsys, "catalog", "doubled_line_dual:3")
    assert out.splitlines()[1:] == ["n 6", "1 2 3 4", "1 2 5 6", "3 4 5 6"]
    code, out, _ = run(capsys, "catalog", "--json", "uniform:3,4")
    assert json.loads(out)["circuits"] == [[1, 2, 3, 4]]


def test_explore_catalog(capsys):
    code, out, _ = run(capsys, "explore", "--family", "catalog", "--n-max", "10", "--json")
    data = json.loads(out)
    assert code == 0 and data["found"] == 0
    names = [c["name"] for c in data["candidates"]]
    assert "doubled_line_dual:4" in names and "doubled_line_dual:5" in names
    for c in data["candidates"]:
        if c["name"].startswith("doubled_line_dual"):
            assert c["non_closed_circuits"] == 0 and not c["matches"]


def test_explore_random_families(capsys):
    code, out, _ = run(capsys, "explore", "--family", "gf3", "--n-max", "8",
                       "--seed", "1", "--count", "100", "--json")
    data = json.loads(out)
    assert code == 0 and data["scanned"] == 100
    code, out, _ = run(capsys, "explore", "--family", "gf2", "--n-max", "8",
                       "--seed", "1", "--count", "50", "--json")
    data = json.loads(out)
    assert data["scanned"] == 50 and data["found"] == 0 and data["non_binary"] == 0


def test_output_is_byte_identical(capsys):
    a = run(capsys, "analyze", "nonfano", "--json")[1]
    b = run(capsys, "analyze", "nonfano", "--json", "--threads", "4")[1]
    assert a == b
    a = run(capsys, "explore", "--family", "gf3", "--n-max", "7", "--seed", "3",
            "--count", "20")[1]
    b = run(capsys, "explore", "--family", "gf3", "--n-max", "7", "--seed", "3",
            "--count", "20", "--threads", "2")[1]
    assert a == b


def test_timing_is_opt_in(capsys):
    rep = json.loads(run(capsys, "analyze", "fano", "--json")[1])
    assert rep["timing_ms"] is None
    rep = json.loads(run(capsys, "analyze", "fano", "--json", "--timing")[1])
    assert rep["timing_ms"] >= 0


@pytest.mark.parametrize("spec", ["nonfano", "uniform:2,5", "doubled_line_dual:3"])
def test_json_report_round_trip(capsys, tmp_path, spec):
    first = run(capsys, "analyze", spec, "--json")[1]
    p = tmp_path / "report.json"
    p.write_text(first)
    second = run(capsys, "analyze", str(p), "--json")[1]
    a, b = json.loads(first), json.loads(second)
    a.pop("input_name"), b.pop("input_name")
    assert a == b


def test_matrix_and_graph_inputs(capsys, tmp_path):
    m = tmp_path / "fano.mat"
    m.write_text("gfmatrix 2 3 7\n1 0 1 0 1 0 1\n0 1 1 0 0 1 1\n0 0 0 1 1 1 1\n")
    rep = json.loads(run(capsys, "analyze", str(m), "--json")[1])
    assert rep["unique_minimal_basis"] and rep["circuit_count"] == 14
    g = tmp_path / "k4.graph"
    g.write_text("graph 4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n")
    rep = json.loads(run(capsys, "analyze", str(g), "--json")[1])
    assert rep["is_binary"] and rep["unique_minimal_basis"]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "tropbasis", "enumerate", "uniform:3,4"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert "{1,2,3,4}" in res.stdout
