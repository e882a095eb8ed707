import json

import pytest

from dtlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_gamma0_json(capsys):
    code, out = run(capsys, "gamma0", "--m", "2", "--n", "5")
    assert code == 0
    data = json.loads(out)
    assert data["m"] == 2 and data["n"] == 5
    assert set(data["external"]) == {"1", "2", "3", "4", "5"}


def test_gamma0_dot_node_count(capsys):
    code, out = run(capsys, "gamma0", "--m", "3", "--n", "7", "--format", "dot")
    assert code == 0
    assert out.startswith("graph disk {")


def test_usage_errors(capsys):
    code, _ = run(capsys, "gamma0", "--m", "5", "--n", "4")
    assert code == 2
    code, _ = run(capsys, "dt", "--config", "/nonexistent.json")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_dominate_and_zigzag(capsys):
    code, out = run(capsys, "dominate", "--m", "2", "--n", "4")
    assert code == 0
    faces = json.loads(out)
    interior = [f for f in faces if f["kind"] == "interior"]
    assert interior == [{"id": "f_1_1", "kind": "interior", "arc": None,
                         "dominating_set": [1, 3], "chart_set": [1, 3],
                         "grid": [1, 1]}]
    code, out = run(capsys, "zigzag", "--m", "2", "--n", "5")
    assert code == 0
    assert sorted((z["start"], z["end"]) for z in json.loads(out)) == \
        [(1, 3), (2, 4), (3, 5), (4, 1), (5, 2)]


def test_orient(capsys):
    code, out = run(capsys, "orient", "--m", "2", "--n", "5")
    assert code == 0
    data = json.loads(out)
    assert data["sources"] == [1, 2]
    assert data["sinks"] == [3, 4, 5]


def test_pipeline_config_roundtrip(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({
        "m": 2, "n": 5, "flavor": "projective",
        "columns": [["1", "0"], ["0", "1"], ["1", "1"], ["1", "2"],
                    ["1", "3"]]}))
    code, out = run(capsys, "psi", "--config", str(cfg))
    assert code == 0
    assert json.loads(out) == {"f_1_1": "-3", "f_2_1": "-1/2"}
    code, out = run(capsys, "dt", "--config", str(cfg))
    assert code == 0
    assert json.loads(out)["columns"][3] == ["1", "-2"]
    code, out = run(capsys, "star", "--config", str(cfg))
    assert code == 0
    assert json.loads(out)["columns"][4] == ["1", "3"]


def test_measure_values(tmp_path, capsys):
    vals = tmp_path / "v.json"
    vals.write_text(json.dumps({"f_1_1": "2"}))
    code, out = run(capsys, "measure", "--m", "2", "--n", "4",
                    "--values", str(vals))
    assert code == 0
    assert json.loads(out)["columns"] == [
        ["1", "0"], ["0", "1"], ["-1", "3"], ["-1", "1"]]


def test_verify_exit_codes(capsys):
    code, out = run(capsys, "verify", "dt-criterion", "--m", "2", "--n", "4")
    assert code == 0
    assert json.loads(out)["pass"]
    code, out = run(capsys, "verify", "lemma1", "--budget", "1")
    assert code == 3


def test_ysystem_cli(capsys):
    code, out = run(capsys, "ysystem", "--p", "1", "--q", "1", "--trials", "3")
    assert code == 0
    assert json.loads(out)["all_divide_bound"]


def test_moves_search(capsys):
    code, out = run(capsys, "moves-search", "--m", "2", "--n", "5")
    assert code == 0
    assert json.loads(out)["found"]
    code, out = run(capsys, "moves-search", "--m", "2", "--n", "5",
                    "--budget", "0")
    assert code == 3


def test_out_flag(tmp_path, capsys):
    path = tmp_path / "g.json"
    code, _ = run(capsys, "gamma0", "--m", "2", "--n", "4",
                  "--out", str(path))
    assert code == 0
    assert json.loads(path.read_text())["n"] == 4
