import json
import subprocess
import sys

from hurwitz_cayley.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    return json.loads(out)


def test_eigen_example(capsys):
    out = run_json(capsys, "eigen", "--d", "3", "--lambda", "[2,1]", "--q", "1/3")
    assert out["omega_hat"] == "8/9"
    assert out["k_hat"] == "0"


def test_eigen_casimir(capsys):
    out = run_json(capsys, "eigen", "--d", "2", "--lambda", "[2]", "--N", "2")
    assert out["casimir"] == out["casimir_check"] == "6"
    assert out["h_hat"] == "4"


def test_verify_jm(capsys):
    out = run_json(capsys, "verify", "jm", "--d", "4")
    assert out["status"] == "pass" and out["failed"] == 0


def test_walks_degree_zero(capsys):
    out = run_json(capsys, "walks", "--d", "0", "--r", "0")
    assert out["count"] == 1


def test_walks_strict_three_cycle(capsys):
    out = run_json(capsys, "walks", "--d", "3", "--to", "(1 2 3)", "--r", "2", "--mode", "strict")
    assert out["count"] == 1


def test_geodesics(capsys):
    out = run_json(capsys, "geodesics", "--d", "4", "--to", "(1 2)(3 4)")
    assert out["geodesics"] == out["formula"] == 2
    assert out["monotone_geodesics"] == out["catalan_product"] == 1


def test_char_table_csv(capsys):
    code, out, _ = run(capsys, "char-table", "--d", "3", "--format", "csv")
    assert code == 0
    rows = out.strip().splitlines()
    assert rows[0] == 'lambda,[3],"[2, 1]","[1, 1, 1]"'
    assert rows[2] == '"[2, 1]",-1,0,2'


def test_plancherel_with_oracle(capsys):
    out = run_json(capsys, "plancherel", "--d", "3", "--classes", "[[2,1],[2,1]]", "--oracle")
    assert out["value"] == out["oracle"] == "3"


def test_hurwitz_cylinder(capsys):
    out = run_json(capsys, "hurwitz", "--geometry", "cylinder", "--d", "4",
                   "--alpha", "[2,1,1]", "--beta", "[4]", "--r", "3", "--connected")
    assert set(out) >= {"value", "genus", "normalized"}
    # r = 3 has the wrong parity for these two classes
    assert out["value"] == "0" and out["genus"] is None
    out = run_json(capsys, "hurwitz", "--geometry", "cylinder", "--d", "4",
                   "--alpha", "[2,1,1]", "--beta", "[4]", "--r", "2", "--connected",
                   "--method", "series")
    assert out["value"] == "96" and out["genus"] == 0 and out["normalized"] == "4"


def test_hurwitz_wrong_marker_count(capsys):
    code, _, err = run(capsys, "hurwitz", "--geometry", "cylinder", "--d", "2", "--alpha", "[2]")
    assert code == 1 and "boundary classes" in err


def test_ym2_micro(capsys):
    out = run_json(capsys, "ym2", "micro", "--m", "0", "--n", "1", "--d", "2", "--N", "5",
                   "--t-order", "2", "--json")
    assert [c["value"] for c in out["coefficients"]] == ["2", "1/25"]
    exp = run_json(capsys, "ym2", "micro", "--m", "3", "--n", "0", "--d", "3", "--N", "6",
                   "--t-order", "3", "--mode", "expansion", "--s-order", "2")
    direct = run_json(capsys, "ym2", "micro", "--m", "3", "--n", "0", "--d", "3", "--N", "6",
                      "--t-order", "3")
    assert exp == direct


def test_ym2_unstable_is_an_error(capsys):
    code, _, err = run(capsys, "ym2", "micro", "--n", "1", "--d", "4", "--N", "2",
                       "--mode", "expansion")
    assert code == 1 and "d <= N" in err


def test_ym2_series_and_area_zero(capsys):
    out = run_json(capsys, "ym2", "series", "--geometry", "torus", "--max-d", "3", "--connected")
    assert out["terms"][0] == {"key": {"d": 1, "t_pow": 0, "u_pow": 0, "v_pow": 0,
                                       "hbar_pow": 0, "markers": []}, "value": "1"}
    out = run_json(capsys, "ym2", "area-zero", "--geometry", "cylinder", "--max-d", "2")
    assert out["slots"] == 2


def test_export_graph(capsys):
    code, out, _ = run(capsys, "export-graph", "--d", "3", "--format", "dot")
    assert code == 0 and out.startswith("graph S3 {") and out.count("--") == 9


def test_exit_codes(capsys):
    assert run(capsys, "walks", "--d", "3", "--r", "1", "--bogus")[0] == 1
    assert run(capsys, "eigen", "--d", "3", "--lambda", "[2,2]")[0] == 1
    assert run(capsys, "walks", "--d", "3", "--to", "(1 2)(2 3)", "--r", "1")[0] == 1
    assert run(capsys, "walks", "--d", "9", "--r", "1")[0] == 2
    assert run(capsys, "export-graph", "--d", "8")[0] == 2
    assert run(capsys)[0] == 1


def test_verify_failure_exit_code(capsys, monkeypatch):
    from hurwitz_cayley import checks

    monkeypatch.setitem(checks.SUITES, "casimir", lambda d: iter([("broken", False)]))
    code, out, _ = run(capsys, "verify", "casimir", "--d", "2")
    assert code == 3 and json.loads(out)["status"] == "fail"


def test_output_is_deterministic(capsys):
    a = run(capsys, "char-table", "--d", "4")
    b = run(capsys, "char-table", "--d", "4")
    assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hurwitz_cayley", "eigen", "--d", "1",
                           "--lambda", "[1]"], capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["k_hat"] == "0"
