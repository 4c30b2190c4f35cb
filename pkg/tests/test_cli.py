import json
import subprocess
import sys

import pytest

from g2solitons import catalog, cli


def run(*args):
    code, text, _ = cli.run(list(args))
    return code, text


def test_check_n3_laplacian():
    code, text = run("check", "--builtin", "n3", "--params", "a=1,b=3/4,c=1/4", "--format", "json")
    rep = json.loads(text)
    assert code == 0 and rep["mode"] == "exact"
    assert rep["laplacian"] == "13/8*e123"
    assert rep["R"] == "-13/16" and rep["pinching"] == "1/2"
    assert rep["closed"] is True and rep["dphi"] == "0"


def test_check_abelian_zero():
    code, text = run("check", "--builtin", "n1", "--format", "json")
    rep = json.loads(text)
    assert code == 0 and rep["tau"] == "0" and rep["laplacian"] == "0" and rep["R"] == "0"
    assert all(x == "0" for row in rep["Q"] for x in row)


def test_check_open_file_has_no_torsion(tmp_path):
    p = tmp_path / "open.json"
    code, text = run("catalog", "export", "--builtin", "n2", "--params", "a=1,b=2")
    assert code == 0
    p.write_text(text)
    code, text = run("check", "--file", str(p), "--format", "json")
    rep = json.loads(text)
    assert code == 0 and rep["closed"] is False and rep["dphi"] != "0"
    assert "tau" not in rep and "Q" not in rep


def test_exact_strings_never_decimal():
    _, text = run("check", "--builtin", "n4", "--format", "json")
    rep = json.loads(text)
    assert rep["tau"] == "sqrt2*e16 - sqrt2*e34 + e37 - e56"
    assert "." not in text


@pytest.mark.parametrize("name", catalog.NAMES)
def test_round_trip_reports(tmp_path, name):
    _, exported = run("catalog", "export", "--builtin", name)
    p = tmp_path / f"{name}.json"
    p.write_text(exported)
    for fmt in ("text", "json"):
        a = run("check", "--builtin", name, "--format", fmt)
        b = run("check", "--file", str(p), "--format", fmt)
        assert a == b


def test_soliton_n4():
    code, text = run("soliton", "--builtin", "n4", "--params", "a=sqrt2,b=1,c=sqrt2,d=1")
    d = json.loads(text)
    assert code == 0 and d["lambda"] == "9"
    assert d["classification"] == "semi-algebraic-only" and d["sign_class"] == "expanding"


def test_soliton_n5():
    code, text = run("soliton", "--builtin", "n5", "--params", "a=sqrt2,b=1,c=1,d=sqrt2")
    assert code == 0 and json.loads(text)["lambda"] == "9"


def test_soliton_n3():
    code, text = run("soliton", "--builtin", "n3", "--params", "a=2,b=1,c=1")
    d = json.loads(text)
    assert code == 0 and d["lambda"] == "15" and d["classification"] == "algebraic"


def test_soliton_none_and_open():
    code, text = run("soliton", "--builtin", "n4", "--params", "a=1,b=1,c=1,d=1")
    assert code == 1 and json.loads(text)["soliton"] is None
    code, text = run("soliton", "--builtin", "n2", "--params", "a=1,b=2")
    assert code == 1 and "not closed" in json.loads(text)["error"]


def test_soliton_text_format():
    code, text = run("soliton", "--builtin", "n2", "--format", "text")
    assert code == 0 and "lambda: 5" in text


def test_no_form_is_not_positive():
    assert run("check", "--builtin", "n9")[0] == cli.EXIT_NOT_POSITIVE
    assert run("soliton", "--builtin", "n9")[0] == cli.EXIT_NOT_POSITIVE
    assert run("flow", "--builtin", "n9")[0] == cli.EXIT_NOT_POSITIVE


def test_not_positive_file(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"dim": 7, "brackets": [], "form": [{"indices": [1, 2, 3], "coeff": "1"}]}))
    code, text = run("check", "--file", str(p), "--format", "json")
    assert code == 3 and json.loads(text)["positivity"] == "not-positive"


@pytest.mark.parametrize("args", [
    ["check", "--builtin", "n13"],
    ["check", "--builtin", "n2", "--params", "a=1"],
    ["check", "--builtin", "n2", "--params", "a=1,b=0"],
    ["check", "--builtin", "n2", "--params", "a=x,b=1"],
    ["check"],
    ["check", "--builtin", "n2", "--file", "x.json"],
    ["check", "--file", "/nonexistent/file.json"],
    ["check", "--builtin", "n2", "--mode", "symbolic"],
    ["flow", "--builtin", "n2", "--dt", "abc"],
    ["report", "tables", "--only", "n1"],
    ["report", "tables", "--expected", "/nonexistent.json"],
    ["check", "--builtin", "n2", "--t-max", "2"],
    ["frobnicate"],
])
def test_parse_errors(args):
    assert run(*args)[0] == cli.EXIT_PARSE


def test_mode_env(monkeypatch):
    monkeypatch.setenv("G2_MODE", "float")
    rep = json.loads(run("check", "--builtin", "n2", "--format", "json")[1])
    assert rep["mode"] == "float"
    assert float(rep["R"]) == pytest.approx(-1.0)
    rep = json.loads(run("check", "--builtin", "n2", "--format", "json", "--mode", "exact")[1])
    assert rep["mode"] == "exact" and rep["R"] == "-1"


def test_irrational_metric_reports_float_only(tmp_path, entries):
    # 2 phi has volume 2^(7/3): no exact root, so the whole report is float
    from g2solitons import formats

    e = entries["n2"]
    p = tmp_path / "scaled.json"
    formats.save(p, e.algebra, e.form * 2)
    code, text = run("check", "--file", str(p), "--format", "json")
    rep = json.loads(text)
    assert code == 0 and rep["mode"] == "float"
    assert float(rep["R"]) == pytest.approx(-(2 ** (-2 / 3)))
    assert all("sqrt" not in x for row in rep["Q"] for x in row)


def test_out_file(tmp_path):
    p = tmp_path / "r.json"
    assert cli.main(["check", "--builtin", "n2", "--format", "json", "--out", str(p)]) == 0
    assert json.loads(p.read_text())["R"] == "-1"


def test_errors_go_to_stderr(tmp_path, capsys):
    p = tmp_path / "never.txt"
    assert cli.main(["flow", "--builtin", "n7", "--dt", "1.0", "--out", str(p)]) == 4
    assert not p.exists()
    assert "positive" in capsys.readouterr().err


def test_flow_exit_codes(tmp_path):
    assert run("flow", "--builtin", "n7", "--dt", "1.0")[0] == cli.EXIT_POSITIVITY_LOST
    _, exported = run("catalog", "export", "--builtin", "n2", "--params", "a=1,b=2")
    p = tmp_path / "open.json"
    p.write_text(exported)
    code, text = run("flow", "--file", str(p))
    assert code == cli.EXIT_DRIFT and "not closed" in text


def test_flow_large_step_reports_fit_failure():
    code, text = run("flow", "--builtin", "n7", "--dt", "0.5", "--format", "json")
    d = json.loads(text)
    assert code == 0 and d["c_est"] is None and d["max_drift"] == 0.0 and d["max_residual"] > 1e-6


def test_flow_abelian_constant_columns():
    code, text = run("flow", "--builtin", "n1", "--t-max", "0.1", "--dt", "0.01")
    rows = [line.split(",") for line in text.splitlines()[1:]]
    assert code == 0 and len(rows) == 2
    assert all(r[1:36] == rows[0][1:36] for r in rows)


def test_flow_json_n3():
    code, text = run("flow", "--builtin", "n3", "--t-max", "0.2", "--dt", "0.002", "--format", "json")
    d = json.loads(text)
    assert code == 0 and abs(d["c_est"] - 65 / 16) < 1e-4 * 65 / 16
    assert set(d) >= {"c_est", "fit_error", "samples"}


def test_catalog_list():
    code, text = run("catalog", "list", "--format", "json")
    rows = json.loads(text)
    assert code == 0 and [r["name"] for r in rows] == list(catalog.NAMES)
    assert run("catalog", "list")[1].count("\n") == 12


def test_report_tables():
    code, text = run("report", "tables")
    assert code == 0 and text.endswith("48 checks, 0 mismatches\n")
    code, text = run("report", "tables", "--only", "n6", "--format", "json")
    d = json.loads(text)
    assert code == 0 and d["checked"] == 8 and d["ok"]


def corrupted(tmp_path, name, key, value):
    data = catalog.expected_to_dict()
    data[name][key] = value
    p = tmp_path / "expected.json"
    p.write_text(json.dumps(data))
    return p


def test_report_corrupted(tmp_path):
    p = corrupted(tmp_path, "n4", "R", "-4")
    code, text = run("report", "tables", "--expected", str(p), "--format", "json")
    d = json.loads(text)
    assert code == 1 and len(d["mismatches"]) == 1
    m = d["mismatches"][0]
    assert (m["algebra"], m["quantity"], m["expected"], m["computed"]) == ("n4", "R", "-4", "-3")


def test_report_corrupted_form(tmp_path):
    p = corrupted(tmp_path, "n2", "tau", "-e35 + 2*e26")
    code, text = run("report", "tables", "--expected", str(p))
    assert code == 1 and text.count("MISMATCH") == 1 and "n2 tau" in text


def test_entry_point():
    out = subprocess.run([sys.executable, "-m", "g2solitons.cli", "soliton", "--builtin", "n2"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and json.loads(out.stdout)["lambda"] == "5"
