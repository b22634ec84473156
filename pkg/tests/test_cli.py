import json
import math
import subprocess
import sys

import numpy as np
import pytest

from opradii.cli import main, parse_poly
from opradii.errors import ValidationError
from opradii.linalg import matrix_from_json, save_matrix
from opradii.models import jordan_cell, kernel_model
from opradii.radii import numerical_radius, omega_rho


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_radius_of_jordan_cell(tmp_path, capsys):
    path = tmp_path / "m.json"
    save_matrix(path, jordan_cell(4).matrix)
    code, out, _ = run(capsys, "radius", "--rho", "2", "--matrix", str(path))
    assert code == 0
    assert json.loads(out)["value"] == pytest.approx(math.cos(math.pi / 5), abs=1e-8)


def test_radius_default_rho_and_other_rho(tmp_path, capsys):
    path = tmp_path / "m.json"
    A = np.array([[1.0, 1.0], [0.0, -1.0]])
    save_matrix(path, A)
    code, out, _ = run(capsys, "radius", "--matrix", str(path))
    assert code == 0 and json.loads(out)["rho"] == 2.0
    code, out, _ = run(capsys, "radius", "--rho", "3", "--matrix", str(path), "--tol", "1e-9")
    assert json.loads(out)["value"] == pytest.approx(omega_rho(A, 3.0, tol=1e-9).value, abs=1e-12)


def test_model_jordan(capsys):
    code, out, _ = run(capsys, "model", "jordan", "--n", "5")
    assert code == 0
    obj = json.loads(out)
    M = matrix_from_json(obj)
    np.testing.assert_array_equal(M, np.diag(np.ones(4), 1))
    assert obj["kind"] == "jordan"


@pytest.mark.parametrize("argv", [("model", "jordan", "--n", "6"), ("model", "bergman", "--n", "3"), ("model", "kernel", "--poly", "0.12:0,-0.7:0.1,1:0")])
def test_model_radius_round_trip_exact(tmp_path, capsys, argv):
    out_path = tmp_path / "model.json"
    assert main([*argv, "--out", str(out_path)]) == 0
    M = matrix_from_json(json.loads(out_path.read_text()))
    code, out, _ = run(capsys, "radius", "--matrix", str(out_path))
    assert code == 0
    assert json.loads(out)["value"] == numerical_radius(M, tol=1e-8).value


def test_model_kernel_matches_library(capsys):
    code, out, _ = run(capsys, "model", "kernel", "--poly", "0.12:0,-0.7:0.1,1:0")
    assert code == 0
    M = matrix_from_json(json.loads(out))
    np.testing.assert_allclose(M, kernel_model([0.12, -0.7 + 0.1j, 1.0]).matrix, atol=1e-15)


def test_parse_poly():
    np.testing.assert_array_equal(parse_poly("1:0, 0:-2"), [1, -2j])
    with pytest.raises(ValidationError, match="item 1"):
        parse_poly("1:0,2")
    with pytest.raises(ValidationError, match="item 0"):
        parse_poly("a:b")


def test_verify_constants_and_out(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "constants", "--out", str(out_path))
    assert code == 0
    assert json.loads(out)["ok"] is True
    assert json.loads(out_path.read_text())["reports"][0]["suite"] == "constants"


def test_verify_suite_exit_codes(tmp_path, capsys):
    code, out, _ = run(capsys, "verify", "epsilonized", "--seed", "42", "--trials", "30")
    assert code == 0
    out_path = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "epsilonized", "--seed", "42", "--trials", "5", "--tol", "-1", "--out", str(out_path))
    assert code == 1
    full = json.loads(out_path.read_text())
    assert full["reports"][0]["violations"] and "margins" in full["reports"][0]
    assert "margins" not in json.loads(out)["reports"][0]


def test_bounds_table(capsys):
    code, out, _ = run(capsys, "bounds", "table", "--n", "9", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "name,n,k,l,rho,epsilon,value"
    code, out, _ = run(capsys, "bounds", "table", "--n", "9", "--k", "3", "--l", "7")
    rows = json.loads(out)
    two = [r for r in rows if r["name"] == "two_coeff_closed"]
    assert len(two) == 1 and two[0]["value"] == pytest.approx(1.3065630, abs=1e-7)


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "--n", "4", "--k", "1")
    assert code == 0
    obj = json.loads(out)
    assert obj["ratio"] == pytest.approx(math.cos(math.pi / 5), abs=1e-6)
    assert obj["poly"]["degree"] == 3


@pytest.mark.parametrize(
    "argv",
    [
        ("radius", "--bogus"),
        ("frobnicate",),
        ("radius",),
        ("model", "jordan"),
        ("model", "jordan", "--n", "0"),
        ("model", "kernel", "--poly", "2:0,1:0"),
        ("witness", "--n", "3", "--k", "5"),
        ("radius", "--matrix", "/nonexistent/m.json"),
        ("model", "jordan", "--n", "3", "--format", "csv"),
        ("verify", "nilpotent", "--seed", "-3"),
        ("verify", "nilpotent", "--trials", "0"),
    ],
)
def test_invalid_input_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


@pytest.mark.parametrize(
    "content,field",
    [
        ("{bad", "JSON"),
        ('{"entries": []}', "dim"),
        ('{"dim": 2, "entries": [[1, 0]]}', "entries"),
        ('{"dim": 1, "entries": [[1, "x"]]}', "entries"),
    ],
)
def test_malformed_matrix_names_field(tmp_path, capsys, content, field):
    path = tmp_path / "m.json"
    path.write_text(content)
    code, _, err = run(capsys, "radius", "--matrix", str(path))
    assert code == 2
    assert field in err


def test_module_entry_point(tmp_path):
    res = subprocess.run([sys.executable, "-m", "opradii", "model", "jordan", "--n", "2"], capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["dim"] == 2
    res = subprocess.run([sys.executable, "-m", "opradii", "radius", "--nope"], capture_output=True, text=True)
    assert res.returncode == 2
