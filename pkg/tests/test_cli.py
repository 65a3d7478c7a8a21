import json

import pytest

from alphaspec import cli
from alphaspec.bounds import BoundRecord, BoundReport


@pytest.fixture
def p4_file(tmp_path):
    f = tmp_path / "p4.txt"
    f.write_text("4 3\n0 1\n1 2\n2 3\n")
    return str(f)


def run(capsys, *argv):
    rc = cli.main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_spectrum_human(capsys, p4_file):
    rc, out, _ = run(capsys, "spectrum", p4_file, "--alpha", "0.5")
    assert rc == 0
    assert out.startswith("n=4 m=3 alpha=0.5")
    assert "eigenvalues:" in out


def test_spectrum_json(capsys, p4_file):
    rc, out, _ = run(capsys, "spectrum", p4_file, "--alpha", "0.25", "--json")
    assert rc == 0
    doc = json.loads(out)
    assert doc["n"] == 4 and len(doc["eigenvalues"]) == 4
    assert doc["residual_norm"] < 1e-12


def test_spectrum_fixed_kinds(capsys, p4_file):
    rc, out, _ = run(capsys, "spectrum", p4_file, "--alpha", "0", "--matrix", "laplacian")
    assert rc == 0 and "matrix=laplacian" in out


def test_spectrum_integral_formatting(capsys, tmp_path):
    f = tmp_path / "k4.txt"
    f.write_text("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    rc, out, _ = run(capsys, "spectrum", str(f), "--alpha", "1")
    assert rc == 0
    # the degree matrix is diagonal, so its eigenvalues print as integers
    assert "eigenvalues: 3, 3, 3, 3" in out


def test_bounds_ok(capsys, p4_file):
    rc, out, _ = run(capsys, "bounds", p4_file, "--alpha", "0.3")
    assert rc == 0
    assert "violations: 0" in out


def test_bounds_json(capsys, p4_file):
    rc, out, _ = run(capsys, "bounds", p4_file, "--alpha", "0.3", "--json")
    assert rc == 0
    doc = json.loads(out)
    assert doc["violations"] == []


def test_bounds_violation_exit_code(capsys, p4_file, monkeypatch):
    fake = BoundReport("g", 0.3, (
        BoundRecord("made_up", "upper_on", "lambda_1", 1.0, 2.0, -1.0,
                    False, False, False, False, ""),))
    monkeypatch.setattr(cli, "bound_report", lambda *a, **k: fake)
    rc, out, _ = run(capsys, "bounds", p4_file, "--alpha", "0.3")
    assert rc == 2
    assert "VIOLATED" in out


def test_sweep_stdout(capsys, p4_file):
    rc, out, _ = run(capsys, "sweep", p4_file, "--grid", "0:1:0.5")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "alpha,lambda_1,lambda_2,lambda_3,lambda_4"
    assert len(lines) == 4
    assert lines[1].startswith("0.0,")
    assert lines[3].startswith("1.0,")


def test_sweep_to_file(capsys, p4_file, tmp_path):
    out_path = tmp_path / "sweep.csv"
    rc, out, _ = run(capsys, "sweep", p4_file, "--grid", "0:1:0.25",
                     "--out", str(out_path))
    assert rc == 0
    assert "wrote 5 rows" in out
    assert out_path.read_text().count("\n") == 6


def test_sweep_grid_errors(capsys, p4_file):
    rc, _, err = run(capsys, "sweep", p4_file, "--grid", "0:1")
    assert rc == 64 and "grid" in err
    rc, _, err = run(capsys, "sweep", p4_file, "--grid", "0:1:-0.5")
    assert rc == 64
    rc, _, err = run(capsys, "sweep", p4_file, "--grid", "1:0:0.5")
    assert rc == 64


def test_closed_form_complete(capsys):
    rc, out, _ = run(capsys, "closed-form", "--family", "complete",
                     "--params", "5", "--alpha", "0.5")
    assert rc == 0
    assert "4 (x1)" in out and "1.5 (x4)" in out


def test_closed_form_multipartite_json(capsys):
    rc, out, _ = run(capsys, "closed-form", "--family", "multipartite",
                     "--params", "2", "2", "2", "--alpha", "0", "--json")
    assert rc == 0
    doc = json.loads(out)
    total = sum(e["multiplicity"] for e in doc["eigenvalues"])
    assert total == 6
    assert doc["eigenvalues"][0]["value"] == pytest.approx(4.0, abs=1e-9)


def test_closed_form_param_errors(capsys):
    rc, _, err = run(capsys, "closed-form", "--family", "complete",
                     "--params", "3", "4", "--alpha", "0.5")
    assert rc == 64 and "one parameter" in err
    rc, _, err = run(capsys, "closed-form", "--family", "star",
                     "--params", "1", "--alpha", "0.5")
    assert rc == 64


def test_verify_turan_cli(capsys):
    rc, out, _ = run(capsys, "verify-turan", "--n", "5", "--r", "2",
                     "--alphas", "0.2,0.8")
    assert rc == 0
    assert "all checks passed" in out
    rc, out, _ = run(capsys, "verify-turan", "--n", "5", "--r", "2",
                     "--alphas", "0.2", "--json")
    doc = json.loads(out)
    assert doc["ok"] is True


def test_verify_turan_counterexample_exit(capsys, monkeypatch):
    import alphaspec.extremal as extremal
    from alphaspec import path
    monkeypatch.setattr(extremal, "turan", lambda n, r: path(n))
    rc, out, _ = run(capsys, "verify-turan", "--n", "5", "--r", "2",
                     "--alphas", "0.1")
    assert rc == 2
    assert "COUNTEREXAMPLE" in out


def test_psd_threshold_cli(capsys, tmp_path):
    f = tmp_path / "k3.txt"
    f.write_text("3 3\n0 1\n0 2\n1 2\n")
    rc, out, _ = run(capsys, "psd-threshold", str(f))
    assert rc == 0
    assert abs(float(out.split(":")[1]) - 1 / 3) < 1e-8
    rc, out, _ = run(capsys, "psd-threshold", str(f), "--json")
    doc = json.loads(out)
    assert doc["threshold"] == pytest.approx(1 / 3, abs=1e-8)


def test_enumerate_streams_blocks(capsys):
    rc, out, err = run(capsys, "enumerate", "--n", "3")
    assert rc == 0
    blocks = [b for b in out.split("\n\n") if b.strip()]
    assert len(blocks) == 8
    assert "# 8 graphs" in err
    rc, out, err = run(capsys, "enumerate", "--n", "4", "--clique-free", "3")
    assert rc == 0
    assert "# 41 graphs" in err


def test_enumerate_capacity(capsys):
    rc, _, err = run(capsys, "enumerate", "--n", "20")
    assert rc == 65 and "limited" in err


def test_exit_codes(capsys, tmp_path, p4_file):
    rc, _, err = run(capsys, "spectrum", str(tmp_path / "absent.txt"),
                     "--alpha", "0.5")
    assert rc == 66
    rc, _, err = run(capsys, "spectrum", p4_file, "--alpha", "2.0")
    assert rc == 64
    bad = tmp_path / "bad.txt"
    bad.write_text("not a graph\n")
    rc, _, err = run(capsys, "spectrum", str(bad), "--alpha", "0.5")
    assert rc == 65
    rc, _, _ = run(capsys, "nonsense")
    assert rc == 64
    rc, _, _ = run(capsys, "spectrum", p4_file, "--alpha", "zebra")
    assert rc == 64


def test_output_deterministic(capsys, p4_file):
    rc1, out1, _ = run(capsys, "sweep", p4_file, "--grid", "0:1:0.1")
    rc2, out2, _ = run(capsys, "sweep", p4_file, "--grid", "0:1:0.1")
    assert rc1 == rc2 == 0
    assert out1 == out2
