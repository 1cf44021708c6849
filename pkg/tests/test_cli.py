"""CLI behaviour and golden outputs.  Regenerate goldens with UPDATE_GOLDEN=1."""

import io
import json
import math
import os
import pathlib

import pytest

from polyclosure.cli import EXIT_ERROR, EXIT_OK, EXIT_UNDETERMINED, run

GOLDEN_DIR = pathlib.Path(__file__).parent / "golden"

GOLDEN = {
    "norm_diagonal_line_m3": ["norm", "(X1+X2)^6*(X1-X2)"],
    "closure_primary_boundary": ["closure-primary", "(X1-1)^2", "(X1-1)*(X2-1)", "(X2-1)^2", "--point", "1,1"],
    "closure_primary_interior": ["closure-primary", "X1^3", "X1^2*X2", "X1*X2^2", "X2^3", "--point", "0,0"],
    "closure_primary_exterior": ["closure-primary", "(X1-2)^2", "(X1-2)*X2", "X2^2", "--point", "2,0"],
    "closure_plane_diagonal_line": ["closure-plane", "X1+X2-2"],
    "closure_plane_hyperbola_cubed": ["closure-plane", "(X1*X2-1)^3", "--factor", "X1*X2-1:3"],
    "closure_plane_torus_family_squared": ["closure-plane", "(1+1/2*X+1/2*Y+X*Y)^2", "--factor", "1+1/2*X+1/2*Y+X*Y:2"],
    "classify_a": ["classify-curve", "X1-1/2"],
    "classify_b": ["classify-curve", "X1-1"],
    "classify_c": ["classify-curve", "X2+1"],
    "classify_d": ["classify-curve", "X1*X2-1"],
    "classify_e": ["classify-curve", "X1+X2-2"],
    "rates_short": ["rates", "--kmin", "3", "--kmax", "6", "--g1k-kmax", "40"],
    "g_table_bound": ["g-table", "X1*X2-1", "--kmax", "10", "--truncation", "4", "--samples", "16"],
    "dbar_check_coarse": ["dbar-check", "--grid", "32"],
    "loja_koszul_diagonal_line": ["loja", "X1+X2-2", "--g", "X1-1", "--grid", "16", "--koszul"],
    "itilde_zero_dim": ["itilde", "X1+X2-2", "(X1-1)^2"],
    "gb_small": ["gb", "X1^2+X2^2-2", "X1*X2-1"],
    "probe_n3_short": ["probe-n3", "--kmax", "5", "--truncation", "10"],
}


def invoke(argv):
    buf = io.StringIO()
    code = run(argv, stdout=buf)
    return code, buf.getvalue()


def structurally_equal(a, b, path="$"):
    if isinstance(a, dict) and isinstance(b, dict):
        assert sorted(a) == sorted(b), f"{path}: keys {sorted(a)} != {sorted(b)}"
        for k in a:
            structurally_equal(a[k], b[k], f"{path}.{k}")
    elif isinstance(a, list) and isinstance(b, list):
        assert len(a) == len(b), f"{path}: lengths {len(a)} != {len(b)}"
        for i, (x, y) in enumerate(zip(a, b)):
            structurally_equal(x, y, f"{path}[{i}]")
    elif isinstance(a, float) or isinstance(b, float):
        assert math.isclose(a, b, rel_tol=1e-6, abs_tol=1e-12), f"{path}: {a} != {b}"
    else:
        assert a == b, f"{path}: {a!r} != {b!r}"


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_golden(name):
    code, out = invoke(GOLDEN[name])
    assert code == EXIT_OK, out
    path = GOLDEN_DIR / f"{name}.json"
    if os.environ.get("UPDATE_GOLDEN"):
        GOLDEN_DIR.mkdir(exist_ok=True)
        path.write_text(out)
    structurally_equal(json.loads(out), json.loads(path.read_text()))


def test_norm_example_value():
    _, out = invoke(GOLDEN["norm_diagonal_line_m3"])
    assert json.loads(out)["norm"]["exact"] == "40"


def test_closure_plane_example_basis():
    _, out = invoke(GOLDEN["closure_plane_diagonal_line"])
    assert json.loads(out)["basis"] == ["X1 - 1", "X2 - 1"]


def test_determinism():
    argv = ["classify-curve", "1+1/2*X+1/2*Y+X*Y", "--seed", "3"]
    assert invoke(argv)[1] == invoke(argv)[1]


@pytest.mark.parametrize("argv, code", [
    (["norm", "X1^-1"], "syntax_error"),
    (["closure-primary", "X1", "X2", "--point", "1,0"], "not_primary"),
    (["itilde", "X1*X2-1"], "not_zero_dimensional"),
    (["g-table", "X1-1/2+X2"], "series_precondition"),
    (["classify-curve", "(X1-1/2)^2"], "curve_input"),
])
def test_errors_are_json_objects(argv, code):
    rc, out = invoke(argv)
    assert rc == EXIT_ERROR
    err = json.loads(out)["error"]
    assert err["code"] == code and err["message"]


def test_bad_arguments_exit_one():
    assert invoke(["no-such-command"])[0] == EXIT_ERROR


def test_undetermined_exit_code(monkeypatch):
    from polyclosure.plane import classify as classify_mod
    from polyclosure.plane.classify import CurveClass

    monkeypatch.setattr(classify_mod, "classify_curve", lambda f, samples=32, seed=0: CurveClass("Undetermined"))
    code, out = invoke(["classify-curve", "X1*X2-1"])
    assert code == EXIT_UNDETERMINED
    assert json.loads(out)["class"]["tag"] == "Undetermined"


def test_out_file_and_csv(tmp_path):
    target = tmp_path / "table.csv"
    code, _ = invoke(["g-table", "X1*X2-1", "--kmax", "3", "--truncation", "2", "--format", "csv",
                      "--out", str(target)])
    assert code == EXIT_OK
    lines = target.read_text().splitlines()
    assert lines[0] == "l,k,j,coefficient" and len(lines) > 1


def test_generators_from_file(tmp_path):
    src = tmp_path / "gens.txt"
    src.write_text("# a zero-dimensional ideal supported at (1,1)\nX1+X2-2\n(X1-1)^2\n")
    code, out = invoke(["itilde", f"@{src}"])
    assert code == EXIT_OK and json.loads(out)["basis"] == ["X1 - 1", "X2 - 1"]
