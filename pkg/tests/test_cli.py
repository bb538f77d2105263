import json
import subprocess
import sys

import pytest

from cdelab import cli
from cdelab.cli import BUILTINS, JobSpec, main, render_table, run_job, serialize


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def write_doc(tmp_path, doc, name="alg.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_hecke_a2_example(capsys):
    code, out, _ = run(["hecke", "--type", "A2", "--q", "z + t", "--cyclo", "3"], capsys)
    assert code == 0
    res = json.loads(out)["result"]
    assert res["E"] == [[1, 0], [0, 1], [1, 1]]
    assert res["C"] == [[2, 1], [1, 2]]
    assert res["passed"] and res["q_at_zero"] == "z"
    assert any("symmetry" in a["name"] for a in res["audits"])


def test_verify_trivial_file(tmp_path, capsys):
    path = write_doc(tmp_path, BUILTINS["trivial"], "trivial.json")
    code, out, _ = run(["verify", "--input", path], capsys)
    assert code == 0
    res = json.loads(out)["result"]
    assert res["D"] == res["C"] == res["E"] == [[1]]


def test_verify_builtin_hecke_a1(capsys):
    code, out, _ = run(["verify", "--input", "hecke-a1"], capsys)
    res = json.loads(out)["result"]
    assert code == 0 and res["D"] == [[1, 1]] and res["C"] == [[2]]


def test_osl2_table_all_equal(capsys):
    code, out, _ = run(["osl2", "--gamma", "2", "--depth", "8"], capsys)
    assert code == 0
    res = json.loads(out)["result"]
    assert all(p["equal"] for p in res["pairs"]) and len(res["pairs"]) == 81
    assert "!" not in res["table"]


def test_osl2_gamma_forms(capsys):
    a = run(["osl2", "--gamma", "4,1", "--depth", "2"], capsys)
    b = run(["osl2", "--gamma", "4", "1", "--depth", "2"], capsys)
    assert a[0] == b[0] == 0
    assert json.loads(a[1])["result"] == json.loads(b[1])["result"]


def test_osl2_undeformed(capsys):
    code, out, _ = run(["osl2", "--gamma", "0", "--depth", "4", "--no-deform"], capsys)
    assert code == 0 and json.loads(out)["result"]["window"]["deform"] is False


def test_lift(capsys):
    code, out, _ = run(["lift", "--input", "hecke-a1", "--idempotent", "primitive:1", "--precision", "8"], capsys)
    res = json.loads(out)["result"]
    assert code == 0 and res["passed"] and res["newton_steps"] == 3
    # the unit of a local algebra lifts to the unit exactly
    assert res["defect_valuation"] == "inf" and res["lift"] == ["1", "0"]


def test_lift_explicit_coordinates(capsys):
    code, out, _ = run(["lift", "--input", "trivial", "--idempotent", "1", "--precision", "4"], capsys)
    assert code == 0 and json.loads(out)["result"]["idempotent"] == ["1"]


def test_lift_rejects_non_idempotent(capsys):
    code, _, err = run(["lift", "--input", "hecke-a1", "--idempotent", "0,1", "--precision", "4"], capsys)
    assert code == 2 and "idempotent" in err


# -- exit codes and errors --------------------------------------------------------------


def test_degenerate_parameter_is_unsupported(capsys):
    code, _, err = run(["hecke", "--type", "A1", "--q", "-1"], capsys)
    assert code == 4 and "unsupported" in err


def test_window_collision_is_input_error(capsys):
    code, _, err = run(["osl2", "--gamma", "2,0", "--depth", "2"], capsys)
    assert code == 2 and "congruent" in err


def test_bad_scalar_and_gamma(capsys):
    assert run(["hecke", "--type", "A2", "--q", "(1 + t"], capsys)[0] == 2
    assert run(["osl2", "--gamma", "x", "--depth", "2"], capsys)[0] == 2


def test_missing_file(tmp_path, capsys):
    code, _, err = run(["verify", "--input", str(tmp_path / "nope.json")], capsys)
    assert code == 2 and "cannot read" in err


def test_invalid_json(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{")
    assert run(["verify", "--input", str(path)], capsys)[0] == 2


@pytest.mark.parametrize("mutate, pointer", [
    (lambda d: d.pop("unit"), "/:"),
    (lambda d: d["structure"][0][0][0].__setitem__(1, "1 +"), "/structure/0/0/0/1"),
    (lambda d: d["structure"][0][0][0].__setitem__(0, 5), "/structure/0/0/0/0"),
    (lambda d: d["structure"][1][1][0].__setitem__(1, "1/t"), "/structure/1/1/0/1"),
    (lambda d: d.__setitem__("dimension", 3), "/structure"),
    (lambda d: d["structure"][0].__setitem__(0, "x"), "/structure/0/0"),
])
def test_schema_errors_carry_pointers(tmp_path, capsys, mutate, pointer):
    doc = json.loads(json.dumps(BUILTINS["hecke-a1"]))
    mutate(doc)
    code, _, err = run(["verify", "--input", write_doc(tmp_path, doc)], capsys)
    assert code == 2
    assert pointer in err


def test_non_associative_document_is_input_error(tmp_path, capsys):
    doc = json.loads(json.dumps(BUILTINS["hecke-a1"]))
    doc["structure"][1][1] = [[1, "1"], [2, "1"]]
    doc["structure"][0][1] = [[1, "1"]]
    code, _, _ = run(["verify", "--input", write_doc(tmp_path, doc)], capsys)
    assert code == 2


def test_failed_audit_exits_three(monkeypatch, capsys):
    def failing(params):
        return {"passed": False, "audits": [{"name": "planted", "passed": False, "lhs": 1, "rhs": 2}]}, False

    monkeypatch.setitem(cli.JOBS, "verify-cde", failing)
    code, out, err = run(["verify", "--input", "trivial"], capsys)
    assert code == 3
    assert json.loads(out)["result"]["passed"] is False
    assert "planted" in err


def test_argparse_rejects_unknown_type(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["hecke", "--type", "B2", "--q", "t"])
    assert exc.value.code == 2


def test_k_simples_in_document(tmp_path, capsys):
    doc = json.loads(json.dumps(BUILTINS["hecke-a1"]))
    doc["K_simples"] = [{"label": "triv", "matrices": [[["1"]], [["-1 + t"]]]},
                        {"label": "sign", "matrices": [[["1"]], [["-1"]]]}]
    code, out, _ = run(["verify", "--input", write_doc(tmp_path, doc)], capsys)
    res = json.loads(out)["result"]
    assert code == 0
    assert [s["label"] for s in res["K_simples"]] == ["triv", "sign"]


# -- output ----------------------------------------------------------------------------


def test_json_is_byte_identical_across_runs(capsys):
    argv = ["hecke", "--type", "A2", "--q", "t"]
    first = run(argv, capsys)[1]
    second = run(argv, capsys)[1]
    assert first == second


def test_json_round_trip():
    report, _ = run_job(JobSpec("osl2-duality", {"gamma": [0], "depth": 3, "deform": True}))
    text = serialize(report)
    assert json.loads(text) == report
    assert serialize(json.loads(text)) == text


def test_unknown_job_kind():
    from cdelab.errors import InputError

    with pytest.raises(InputError):
        run_job(JobSpec("nope"))


def test_table_format(capsys):
    code, out, _ = run(["hecke", "--type", "A2", "--q", "z + t", "--cyclo", "3", "--format", "table"], capsys)
    assert code == 0
    assert "E =" in out and "result: PASS" in out
    code, out, _ = run(["osl2", "--gamma", "0", "--depth", "3", "--format", "table"], capsys)
    assert out.splitlines()[1].startswith("lambda\\mu")
    code, out, _ = run(["lift", "--input", "trivial", "--idempotent", "1", "--precision", "2", "--format", "table"],
                       capsys)
    assert "Newton steps" in out


def test_render_table_matches_report():
    report, _ = run_job(JobSpec("verify-cde", {"input": "hecke-a1"}))
    assert "D =" in render_table(report)


def test_output_file(tmp_path, capsys):
    dest = tmp_path / "report.json"
    code, out, _ = run(["verify", "--input", "trivial", "--output", str(dest)], capsys)
    assert code == 0 and out == ""
    assert json.loads(dest.read_text())["result"]["C"] == [[1]]


def test_unwritable_output(tmp_path, capsys):
    code, _, err = run(["verify", "--input", "trivial", "--output", str(tmp_path / "no" / "x.json")], capsys)
    assert code == 2 and "cannot write" in err


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cdelab.cli", "verify", "--input", "trivial"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["E"] == [[1]]
