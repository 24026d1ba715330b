"""Black-box tests of the mvop executable; MVOP_CLI points at the binary."""

import csv
import io
import json
import os
import subprocess

import pytest

CLI = os.environ.get("MVOP_CLI", "mvop")
P0 = ["--n", "2", "--k", "1", "--ell", "1", "--m", "0"]


def run(*args, check_rc=None):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, timeout=300)
    if check_rc is not None:
        assert proc.returncode == check_rc, proc.stderr
    return proc


def test_eigen_payload():
    out = json.loads(run("eigen", *P0, "--w", "1", "--r", "0", check_rc=0).stdout)
    assert out["lambda"] == -4
    assert out["mu"] == -4
    assert out["label"] == {"w": 1, "r": 0}
    assert out["F0"][0] == 1.0
    assert len(out["coeffs"]) == 2
    assert out["coeffs"][1][0] == pytest.approx(-8 / 3, rel=1e-14)


def test_eigen_constant():
    out = json.loads(run("eigen", *P0, "--w", "0", "--r", "0", check_rc=0).stdout)
    assert out["coeffs"] == [[1.0, 0.0]]


def test_bad_input_exit_codes():
    proc = run("eigen", "--n", "2", "--k", "5", "--ell", "1", "--m", "0", check_rc=2)
    assert "k" in proc.stderr
    run("eigen", "--n", "2", "--k", "x", check_rc=2)
    run("eigen", *P0, "--w", "0", "--r", "3", check_rc=2)
    run("gram", "--n", "2", "--k", "1", "--ell", "1", "--m", "-1", check_rc=2)
    run("bogus", check_rc=2)
    run("verify", *P0, "--suite", "nothing", check_rc=2)


def test_walk_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run("walk", "--steps", "1000", "--seed", "42", "--out", str(a), check_rc=0)
    run("walk", "--steps", "1000", "--seed", "42", "--out", str(b), check_rc=0)
    assert a.read_bytes() == b.read_bytes()
    rows = list(csv.DictReader(io.StringIO(a.read_text())))
    assert len(rows) == 1001
    assert rows[0] == {"step": "0", "w": "0", "r": "0"}
    c = tmp_path / "c.csv"
    run("walk", "--steps", "1000", "--seed", "43", "--out", str(c), check_rc=0)
    assert c.read_bytes() != a.read_bytes()


def test_verify_single_point():
    out = json.loads(run("verify", "--suite", "all", *P0, "--wmax", "4", check_rc=0).stdout)
    assert out["passed"] is True
    names = [c["name"] for c in out["reports"][0]["checks"]]
    assert len(names) == len(set(names))
    assert "three_term" in names and "gram_vector" in names and "eigenfunction_D" in names


def test_verify_jacobi_matches_integer():
    a = json.loads(run("verify", *P0, "--format", "json", check_rc=0).stdout)
    b = json.loads(run("verify", "--jacobi", "--alpha", "0", "--beta", "1", "--k", "1", "--ell", "1", check_rc=0).stdout)
    ra = {c["name"]: c["max_residual"] for c in a["reports"][0]["checks"]}
    rb = {c["name"]: c["max_residual"] for c in b["reports"][0]["checks"]}
    assert ra.keys() == rb.keys()
    for k in ra:
        assert abs(ra[k] - rb[k]) <= 1e-12, k


def test_verify_default_grid_csv():
    proc = run("verify", "--format", "csv", check_rc=0)
    rows = list(csv.DictReader(io.StringIO(proc.stdout)))
    assert len({r["params"] for r in rows}) == 18
    assert all(r["status"] == "pass" for r in rows)


def test_jacobi_gram():
    proc = run("gram", "--jacobi", "--alpha", "0.5", "--beta", "1.5", "--k", "1", "--ell", "1", "--wmax", "3", check_rc=0)
    rows = list(csv.reader(io.StringIO(proc.stdout)))
    header, body = rows[0], rows[1:]
    assert len(body) == 8 and len(header) == 9
    g = [[float(x) for x in r[1:]] for r in body]
    for i in range(8):
        for j in range(8):
            if i != j:
                assert abs(g[i][j]) <= 1e-9 * (g[i][i] * g[j][j]) ** 0.5


def test_json_round_trip():
    text = run("recursion", *P0, "--wmax", "3", check_rc=0).stdout
    again = json.dumps(json.loads(text), indent=2, ensure_ascii=False) + "\n"
    assert again == text
    rec = json.loads(text)
    assert rec["blocks"][0]["A"] == [[0.0, 0.0], [0.0, 0.0]]
    assert rec["blocks"][0]["B"][0] == [0.375, 0.25]


def test_family_and_out_file(tmp_path):
    out = tmp_path / "family.json"
    run("family", *P0, "--wmax", "2", "--out", str(out), check_rc=0)
    fam = json.loads(out.read_text())
    assert [p["w"] for p in fam["polynomials"]] == [0, 1, 2]
    assert fam["polynomials"][0]["coeffs"] == [[[1.0, 0.0], [1.0, -2.0]]]
    csv_text = run("family", *P0, "--wmax", "1", "--format", "csv", check_rc=0).stdout
    assert csv_text.startswith("w,power,row,col,value\n")
