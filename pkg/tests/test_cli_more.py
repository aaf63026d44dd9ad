import json

from gradedquiver.cli import main

from test_cli import fix


def test_cli_hom_from_truncated_projective(capsys):
    # over the loop fixture P1 is infinite dimensional; the formal route
    # still answers exactly: dim Hom(P_1, S_1) = dim (S_1)_0(1) = 1
    code = main([fix("fix_a"), "hom", "--source", "P1", "--target", "S1",
                 "--json"])
    assert code == 0
    assert json.loads(capsys.readouterr().out)["dim"] == 1


def test_cli_hom_into_injective(capsys):
    code = main([fix("fix_b"), "hom", "--source", "S2", "--target", "I2",
                 "--json"])
    assert code == 0
    assert json.loads(capsys.readouterr().out)["dim"] == 1


def test_cli_ext1_projective_source(capsys):
    code = main([fix("fix_a"), "ext1", "--module", "P1", "--target", "S1",
                 "--json"])
    assert code == 0
    assert json.loads(capsys.readouterr().out)["dim"] == 0


def test_cli_envelope_and_copresent(capsys):
    code = main([fix("fix_d"), "envelope", "--module", "S3", "--json"])
    assert code == 0
    assert json.loads(capsys.readouterr().out)["summands"] == [["3", 0]]
    code = main([fix("fix_d"), "copresent", "--module", "S3", "--json"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["i0"] == [["3", 0]] and out["i1"] == [["4", 1]]


def test_cli_transpose_and_nakayama(capsys):
    code = main([fix("fix_b"), "transpose", "--module", "S1", "--json"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["zero"] is False
    assert out["module"]["dims"] == {"(-1,2)": 1}
    code = main([fix("fix_b"), "nakayama", "--module", "S1", "--json"])
    assert code == 0
    assert json.loads(capsys.readouterr().out)["round_trip_identical"] is True


def test_cli_tau_projective_warning(capsys):
    code = main([fix("fix_b"), "tau", "--module", "P1", "--window", "0:2",
                 "--json"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["warning"] and out["module"]["dims"] == {}


def test_cli_validate(capsys):
    code = main([fix("fix_c"), "validate", "--json"])
    assert code == 0
    assert json.loads(capsys.readouterr().out)["ok"] is True


def test_cli_run_tasks(tmp_path, capsys, monkeypatch):
    problem = json.loads(open(fix("fix_b")).read())
    problem["tasks"] = [
        {"name": "dims_p1", "command": "dims", "module": "P1", "window": [0, 3]},
        {"name": "seq", "command": "ars", "module": "S1", "direction": "ending"},
        {"name": "pdtable", "command": "pd", "simple": "all", "cap": 6},
    ]
    pfile = tmp_path / "prob.json"
    pfile.write_text(json.dumps(problem))
    monkeypatch.setenv("GRADEDQUIVER_OUT_DIR", str(tmp_path))
    code = main([str(pfile), "run-tasks", "--json"])
    assert code == 0
    summary = json.loads(capsys.readouterr().out)
    assert set(summary["tasks"]) == {"dims_p1", "seq", "pdtable"}
    seq = json.loads((tmp_path / "seq.json").read_text())
    assert seq["verified"] is True
    dims = json.loads((tmp_path / "dims_p1.json").read_text())
    assert dims["dims"] == {"(0,1)": 1, "(1,2)": 1}


def test_cli_tasks_validate_references(tmp_path):
    problem = json.loads(open(fix("fix_b")).read())
    problem["tasks"] = [{"command": "dims", "module": "missing"}]
    pfile = tmp_path / "bad.json"
    pfile.write_text(json.dumps(problem))
    assert main([str(pfile), "validate"]) == 2


def test_cli_rad_top(capsys):
    code = main([fix("fix_a"), "rad", "--module", "P1", "--window", "0:4",
                 "--json"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["dims"]["(1,1)"] == 1 and out["dims"]["(1,2)"] == 1
    code = main([fix("fix_a"), "top", "--module", "P1", "--window", "0:4",
                 "--json"])
    assert code == 0
    assert json.loads(capsys.readouterr().out)["dims"] == {"(0,1)": 1}
