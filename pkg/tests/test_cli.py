import json
import subprocess
import sys

from zdgforge.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_construct_emits_algebra(tmp_path, capsys):
    path = tmp_path / "algebra.json"
    code, out = run_cli(capsys, "construct", "--variant", "A1", "--p", "2", "--emit", str(path))
    assert code == 0
    summary = json.loads(out)
    assert summary["dim"] == 20
    assert summary["square_ideal_dim"] == 14
    data = json.loads(path.read_text())
    assert data["p"] == 2 and data["dim"] == 20


def test_verify_lemmas_passes(tmp_path, capsys):
    report_path = tmp_path / "report.json"
    code, out = run_cli(
        capsys, "verify-lemmas", "--p", "2,3", "--report", str(report_path)
    )
    assert code == 0
    report = json.loads(report_path.read_text())
    assert report["passed"] is True
    assert report["schema_version"] == 1
    names = [c["name"] for c in report["checks"]]
    assert "square-ideal-dim/A1/p=2" in names
    assert "annihilator/A2/p=3" in names
    assert all("claim" in c for c in report["checks"])


def test_verify_lemmas_rejects_composite(capsys):
    code = main(["verify-lemmas", "--p", "4"])
    err = capsys.readouterr().err
    assert code == 2
    assert "not prime" in err


def test_verify_lemmas_gates_m2_at_2(capsys):
    code = main(["verify-lemmas", "--p", "2", "--variety", "M2"])
    err = capsys.readouterr().err
    assert code == 2
    assert "odd" in err


def test_compare_pair(capsys):
    code, out = run_cli(capsys, "compare", "--pair", "A1B1", "--p", "2")
    assert code == 0
    report = json.loads(out)
    assert report["passed"] is True
    assert report["profiles"]["isomorphic"] is True


def test_compare_cross_family_expectation(capsys):
    code, out = run_cli(
        capsys, "compare", "--pair", "A2B2", "--p", "3", "--expect", "nonisomorphic"
    )
    assert code == 1  # they are isomorphic; the expectation fails


def test_certify_noniso_report(tmp_path, capsys):
    path = tmp_path / "cert.json"
    code, out = run_cli(
        capsys,
        "certify-noniso", "--pair", "A1B1", "--p", "2", "--samples", "100",
        "--report", str(path),
    )
    assert code == 0
    report = json.loads(path.read_text())
    cert = report["certificate"]
    assert (cert["rank_a"], cert["rank_b"]) == (4, 6)
    assert cert["obstruction_failures"] == 100
    assert report["seed"] == cert["seed"]


def test_certify_noniso_gates_even_p(capsys):
    code = main(["certify-noniso", "--pair", "A2B2", "--p", "2"])
    assert code == 2


def test_identity_command(tmp_path, capsys):
    code, _ = run_cli(
        capsys, "identity", "--ring", "Z6", "--expr", "x1(x2 - x2^3)", "--expect", "holds"
    )
    assert code == 0
    code, out = run_cli(
        capsys, "identity", "--ring", "Z4", "--expr", "x1(x2 - x2^2)", "--expect", "fails"
    )
    assert code == 0
    report = json.loads(out)
    assert report["checks"][0]["payload"]["counterexample"] is not None


def test_identity_on_emitted_algebra(tmp_path, capsys):
    path = tmp_path / "a1.json"
    run_cli(capsys, "construct", "--variant", "A1", "--p", "2", "--emit", str(path))
    code, _ = run_cli(
        capsys,
        "identity", "--ring", str(path), "--expr", "x1x2x3",
        "--mode", "multilinear", "--expect", "holds",
    )
    assert code == 0


def test_identity_table_ring_file(tmp_path, capsys):
    path = tmp_path / "ring.json"
    path.write_text(json.dumps({"orders": [2, 3], "products": {"0,0": [1, 0], "1,1": [0, 1]}}))
    code, _ = run_cli(
        capsys, "identity", "--ring", str(path), "--expr", "x1(x2 - x2^3)", "--expect", "holds"
    )
    assert code == 0


def test_census_with_catalog_output(tmp_path, capsys):
    catalog = tmp_path / "catalog.jsonl"
    report_path = tmp_path / "census.json"
    code, out = run_cli(
        capsys,
        "census", "--max-order", "8", "--oracle",
        "--out", str(catalog), "--report", str(report_path),
    )
    assert code == 0
    lines = [json.loads(line) for line in catalog.read_text().splitlines()]
    assert len(lines) == 4
    report = json.loads(report_path.read_text())
    assert report["passed"] is True
    assert [row["order"] for row in report["orders"]] == [2, 4, 8]


def test_export_graph_formats(tmp_path, capsys):
    edges = tmp_path / "graph.txt"
    code, _ = run_cli(
        capsys,
        "export-graph", "--variant", "A1", "--p", "2", "--n", "4",
        "--format", "edges", "--out", str(edges),
    )
    assert code == 0
    header = edges.read_text().splitlines()[0]
    n, m = (int(x) for x in header.split())
    assert n == 511
    code, out = run_cli(
        capsys, "export-graph", "--variant", "A1", "--p", "2", "--format", "blowup"
    )
    assert code == 0
    data = json.loads(out)
    assert data["universal"] == 2**14 - 1
    assert len(data["classes"]) == 63


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "zdgforge.cli", "--help"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    for sub in ("construct", "verify-lemmas", "compare", "certify-noniso",
                "identity", "census", "export-graph"):
        assert sub in proc.stdout
