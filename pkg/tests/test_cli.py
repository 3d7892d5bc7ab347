import json

import numpy as np

from pelletbounds import cli, from_json, matpoly, q_reciprocal, scalar_polynomial


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gap_known_polynomial(capsys):
    code, out, err = run_cli(capsys, "gap", "--poly", "1,-3,2", "--k", "1", "--norm", "one")
    assert code == 0
    assert "x1=1" in out and "x2=2" in out and "count=1" in out


def test_gap_requires_k(capsys):
    code, out, err = run_cli(capsys, "gap", "--poly", "1,-3,2")
    assert code == 1
    assert "k" in err


def test_gap_json_format(capsys):
    code, out, _ = run_cli(capsys, "gap", "--poly", "1,1,1", "--k", "1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload[0]["status"] == "nogap"


def test_bounds_singular_constant_reports_absent(capsys):
    code, out, err = run_cli(capsys, "bounds", "--poly", "1,-3,0", "--norm", "one")
    assert code == 0
    assert "absent" in out


def test_bounds_csv(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--poly", "1,0,-4", "--norm", "one",
                           "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "norm,variant,upper,lower"
    assert lines[1].startswith("one,plain,2,2")


def test_square_round_trip_bit_exact(capsys):
    code, out, _ = run_cli(capsys, "square", "--poly", "1,-3,2", "--variant", "qr")
    assert code == 0
    expected = q_reciprocal(scalar_polynomial([2.0, -3.0, 1.0]))
    parsed = from_json(out)
    for c1, c2 in zip(parsed.coeffs, expected.coeffs):
        assert np.array_equal(c1, c2)
    assert out.strip() == matpoly.to_json(expected)


def test_embed_emits_valid_polynomial(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "embed", "--poly", "1,2,-1,0,0,0,3,0.5,-2")
    assert code == 0
    q = from_json(out)
    assert q.m == 2 and q.n == 4
    # lacunary JSON input path
    spec = {"n": 7, "a": [1.0, 0.0], "b": 2.0, "c": 0.5, "alpha": -3.0, "beta": 0.0,
            "gamma": [1.0, 0.0]}
    path = tmp_path / "lac.json"
    path.write_text(json.dumps(spec))
    code, out, _ = run_cli(capsys, "embed", "--input", str(path))
    assert code == 0
    assert from_json(out).n == 4


def test_embed_rejects_dense_poly(capsys):
    code, _, err = run_cli(capsys, "embed", "--poly", "1,2,-1,9,0,0,3,0.5,-2")
    assert code == 1
    assert "lacunary" in err or "zero" in err


def test_oracle_moduli(capsys):
    code, out, _ = run_cli(capsys, "oracle", "--poly", "1,-3,2")
    assert code == 0
    assert out.split() == ["1", "2"]


def test_oracle_singular_leading_is_inapplicable(capsys, tmp_path):
    p = matpoly.MatrixPolynomial([np.eye(2), np.diag([1.0, 0.0])])
    path = tmp_path / "p.json"
    path.write_text(matpoly.to_json(p))
    code, _, err = run_cli(capsys, "oracle", "--input", str(path))
    assert code == 2
    assert "Singular" in err


def test_gap_singular_pivot_exit_code(capsys, tmp_path):
    p = matpoly.MatrixPolynomial([np.eye(2), np.diag([1.0, 0.0]), np.eye(2)])
    path = tmp_path / "p.json"
    path.write_text(matpoly.to_json(p))
    code, _, err = run_cli(capsys, "gap", "--input", str(path), "--k", "1")
    assert code == 2


def test_bad_inputs_exit_one(capsys, tmp_path):
    assert run_cli(capsys, "gap", "--poly", "abc", "--k", "1")[0] == 1
    assert run_cli(capsys, "bounds")[0] == 1  # no polynomial given
    assert run_cli(capsys, "gap", "--poly", "1,-3,2", "--k", "7")[0] == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run_cli(capsys, "bounds", "--input", str(bad))[0] == 1
    assert run_cli(capsys, "bounds", "--frobnicate")[0] == 1


def test_experiment_csv_deterministic(capsys):
    argv = ["experiment", "--example", "ex1", "--m", "2", "--trials", "5",
            "--seed", "42", "--norm", "one", "--format", "csv"]
    code1, out1, _ = run_cli(capsys, *argv)
    code2, out2, _ = run_cli(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    assert "ex1_upper_m2_one" in out1


def test_experiment_out_file(capsys, tmp_path):
    path = tmp_path / "tables.csv"
    code, out, _ = run_cli(capsys, "experiment", "--example", "ex4", "--n", "20",
                           "--trials", "4", "--seed", "1", "--format", "csv",
                           "--out", str(path))
    assert code == 0
    text = path.read_text()
    assert "ex4_bounds_n20" in text
