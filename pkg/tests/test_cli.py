"""End-to-end command line checks via main() with captured stdout."""

import json

import numpy as np
import pytest

from monobound import format_dense
from monobound.cli import main

DENSE_SAMPLE = """\
3
1.6 0 -0.6
-0.4 1.4 0
-0.2 -0.4 1.6
"""


@pytest.fixture
def sample_file(tmp_path):
    path = tmp_path / "a.txt"
    path.write_text(DENSE_SAMPLE)
    return str(path)


def run(capsys, argv):
    rc = main(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def run_json(capsys, argv):
    rc, out, err = run(capsys, argv)
    assert rc == 0, err
    return json.loads(out)


def test_classify(capsys, sample_file):
    report = run_json(capsys, ["classify", sample_file])
    assert report["schema"] == "monobound.report/1"
    assert report["command"] == "classify"
    cls = report["classification"]
    assert cls["is_monotone"] and cls["is_m_matrix"] and cls["is_quasi_doubly_stochastic"]
    assert cls["strict_set"] == [1, 2, 3]
    assert cls["monotone_witness"]["location"] == [1, 2]
    assert cls["monotone_witness"]["value"] == pytest.approx(0.24 / 3.32, rel=1e-9)


def test_classify_identity(capsys, tmp_path):
    path = tmp_path / "eye.txt"
    path.write_text(format_dense(np.eye(3)))
    cls = run_json(capsys, ["classify", str(path)])["classification"]
    assert cls["is_monotone"] and cls["is_m_matrix"]
    assert not cls["is_irreducible"]
    assert not cls["is_irreducibly_diag_dominant"]


def test_bounds_all(capsys, sample_file):
    report = run_json(capsys, ["bounds", sample_file])
    stats = report["stats"]
    assert stats["sigma_total"] == pytest.approx(3.0, rel=1e-9)
    assert stats["buffoni_number"] == pytest.approx(6.0 / 83.0, rel=1e-9)
    assert stats["min_entry"]["value"] == pytest.approx(6.0 / 83.0, rel=1e-9)
    by_method = {b["method"]: b for b in report["bounds"]}
    assert set(by_method) == {"main", "corollary", "bouchon"}
    assert by_method["main"]["value"] == pytest.approx(6.0 / 65.0, rel=1e-9)
    assert by_method["bouchon"]["value"] == pytest.approx(0.0160947255512506, rel=1e-9)
    assert report["bouchon_quantities"]["eta"] == pytest.approx(4.0)
    assert report["bouchon_quantities"]["distance_max"] == 2


def test_bounds_single_method(capsys, sample_file):
    report = run_json(capsys, ["bounds", sample_file, "--which", "corollary"])
    assert [b["method"] for b in report["bounds"]] == ["corollary"]
    assert "bouchon_quantities" not in report


def test_bounds_custom_pattern(capsys, sample_file, tmp_path):
    pattern = tmp_path / "e13.txt"
    pattern.write_text("3 1\n1 3 1.0\n")
    report = run_json(
        capsys, ["bounds", sample_file, "--which", "bouchon", "--pattern", str(pattern)]
    )
    assert report["bouchon_quantities"]["distance_max"] == 1


def test_vstar_single_entry(capsys, sample_file, tmp_path):
    pert = tmp_path / "e12.txt"
    pert.write_text("3 1\n1 2 1.0\n")
    report = run_json(capsys, ["vstar", sample_file, str(pert)])
    section = report["vstar"]["buffoni"]
    assert section["status"] == "converged"
    assert section["value"] == pytest.approx(0.15, abs=1e-9)
    assert section["iterations"] <= 10


def test_vstar_both_methods(capsys, sample_file, tmp_path):
    pert = tmp_path / "ones.txt"
    pert.write_text(format_dense(np.ones((3, 3))))
    report = run_json(capsys, ["vstar", sample_file, str(pert), "--method", "both"])
    assert report["vstar"]["buffoni"]["value"] == pytest.approx(6.0 / 65.0, rel=1e-9)
    assert report["vstar"]["bisection"]["value"] == pytest.approx(6.0 / 65.0, abs=1e-6)
    assert report["vstar"]["discrepancy"] < 1e-6


def test_vstar_negative_perturbation(capsys, sample_file, tmp_path):
    pert = tmp_path / "neg.txt"
    pert.write_text("3 1\n1 2 -1.0\n")
    rc, out, err = run(capsys, ["vstar", sample_file, str(pert)])
    assert rc == 3
    assert out == ""
    assert "nonnegative" in err


def test_tridiag(capsys, tmp_path):
    path = tmp_path / "t.txt"
    path.write_text(format_dense(np.array([[2.0, -1.0, 0.0], [-1.0, 2.0, -1.0], [0.0, -1.0, 2.0]])))
    report = run_json(capsys, ["tridiag", str(path), "1", "3"])
    assert report["bounds"][0]["value"] == pytest.approx(0.5, rel=1e-9)
    assert report["bounds"][0]["bound_kind"] == "single-entry"
    assert report["entry"] == {"row": 1, "col": 3}


def test_tridiag_bandwidth_error(capsys, tmp_path):
    path = tmp_path / "t.txt"
    path.write_text(format_dense(2.0 * np.eye(3) - np.eye(3, k=1) - np.eye(3, k=-1)))
    rc, out, err = run(capsys, ["tridiag", str(path), "1", "2"])
    assert rc == 3
    assert "|l - k| >= 2" in err


def test_tridiag_rejects_full_matrix(capsys, sample_file):
    rc, out, err = run(capsys, ["tridiag", sample_file, "1", "3"])
    assert rc == 3
    assert "sub/superdiagonal" in err


def test_laplacian(capsys):
    report = run_json(capsys, ["laplacian", "--s", "10", "--t", "20", "--d", "5"])
    by_method = {b["method"]: b for b in report["bounds"]}
    assert by_method["main"]["value"] == pytest.approx(10.0 / 45.0, rel=1e-9)
    assert by_method["bouchon"]["value"] == pytest.approx(0.004414553294057308, rel=1e-9)
    assert report["stats"]["sigma_total"] == pytest.approx(6.0, rel=1e-9)
    assert report["params"] == {"s": 10, "t": 20, "d": 5.0}


def test_laplacian_emit_matrix(capsys, tmp_path):
    out_path = tmp_path / "lap.txt"
    report = run_json(
        capsys,
        ["laplacian", "--s", "2", "--t", "3", "--d", "2", "--emit-matrix", str(out_path)],
    )
    assert report["matrix_file"] == str(out_path)
    m = np.loadtxt(str(out_path), skiprows=1)
    assert m.shape == (5, 5)
    assert m[0, 0] == 5.0
    assert m[0, 4] == -1.0


def test_laplacian_invalid_params(capsys):
    rc, out, err = run(capsys, ["laplacian", "--s", "3", "--t", "2", "--d", "1"])
    assert rc == 3
    assert "s <= t" in err


def test_malformed_input(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3\n1 0\n")
    rc, out, err = run(capsys, ["classify", str(path)])
    assert rc == 2
    assert "expected" in err


def test_missing_file(capsys):
    rc, out, err = run(capsys, ["classify", "/nonexistent/path.txt"])
    assert rc == 2


def test_singular_matrix(capsys, tmp_path):
    path = tmp_path / "sing.txt"
    path.write_text("2\n1 1\n1 1\n")
    rc, out, err = run(capsys, ["bounds", str(path)])
    assert rc == 3
    assert "singular" in err.lower()


def test_plain_rendering(capsys, sample_file):
    rc, out, err = run(capsys, ["bounds", sample_file, "--plain"])
    assert rc == 0
    with pytest.raises(json.JSONDecodeError):
        json.loads(out)
    assert "bounds report" in out


def test_format_override(capsys, tmp_path):
    path = tmp_path / "m.txt"
    path.write_text("2 2\n1 1 2.0\n2 2 3.0\n")
    rc, _, _ = run(capsys, ["classify", str(path), "--format", "dense"])
    assert rc == 2
    report = run_json(capsys, ["classify", str(path), "--format", "coord"])
    assert report["classification"]["is_m_matrix"]
