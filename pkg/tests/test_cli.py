from __future__ import annotations

import json

from segreml.cli import main

W313 = {"n": 2, "w": [[["1", "2", "3"], ["3", "1", "4"]], [["2", "4", "6"], ["4", "6", "10"]]]}
ONES1 = {"n": 1, "w": [[["1", "1"], ["1", "1"]], [["1", "1"], ["1", "1"]]]}


def _write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def test_mldeg_counterexample(tmp_path, capsys):
    path = _write(tmp_path, "w.json", W313)
    assert main(["mldeg", path]) == 0
    assert capsys.readouterr().out.strip() == "8"


def test_analyze_all_ones(tmp_path, capsys):
    path = _write(tmp_path, "ones.json", ONES1)
    assert main(["analyze", path]) == 0
    out = capsys.readouterr().out
    assert "mldeg = 1" in out
    assert out.count("= 0") == 7  # all seven factors vanish


def test_analyze_json_round_trips(tmp_path, capsys):
    path = _write(tmp_path, "w.json", W313)
    assert main(["analyze", path, "--json"]) == 0
    first = capsys.readouterr().out
    payload = json.loads(first)
    assert payload["mldeg"] == 8 and payload["chi_Y"] == -8
    # re-analyze the embedded tensor: byte-identical canonical output
    again = _write(tmp_path, "again.json", payload["tensor"])
    assert main(["analyze", again, "--json"]) == 0
    assert capsys.readouterr().out == first


def test_zero_entry_exit_code(tmp_path, capsys):
    bad = {"n": 1, "w": [[["0", "1"], ["1", "1"]], [["1", "1"], ["1", "1"]]]}
    path = _write(tmp_path, "bad.json", bad)
    assert main(["mldeg", path]) == 2
    assert "zero" in capsys.readouterr().err


def test_malformed_json_exit_code(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert main(["mldeg", str(path)]) == 2


def test_matrix_mldeg(tmp_path, capsys):
    path = _write(tmp_path, "m.json", {"entries": [["1", "2", "3"], ["5", "7", "11"]]})
    assert main(["matrix-mldeg", path]) == 0
    assert capsys.readouterr().out.strip() == "3"


def test_realize_and_oracle_flow(tmp_path, capsys):
    out = tmp_path / "t.json"
    assert main(["realize", "--n", "1", "--r", "4", "--seed", "3", "-o", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["verification"]["mldeg"] == 4
    assert main(["oracle", str(out), "--trials", "2", "--seed", "1"]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result["count"] == 4 and result["stable"] is True


def test_oracle_with_fixed_data(tmp_path, capsys):
    tensor = _write(tmp_path, "ones.json", ONES1)
    data = _write(tmp_path, "u.json", {"u": [[[1, 1], [1, 1]], [[1, 1], [1, 1]]]})
    assert main(["oracle", tensor, "--data", data]) == 0
    assert json.loads(capsys.readouterr().out)["count"] == 1


def test_realize_out_of_range(capsys):
    assert main(["realize", "--n", "1", "--r", "7"]) == 2


def test_atlas_and_signs(tmp_path, capsys):
    atlas_path = tmp_path / "atlas.json"
    csv_path = tmp_path / "atlas.csv"
    assert main(["atlas", "-o", str(atlas_path), "--csv", str(csv_path)]) == 0
    records = json.loads(atlas_path.read_text())
    assert len(records) == 41
    assert csv_path.read_text().splitlines()[0] == "pattern,chi"

    signs_path = tmp_path / "signs.json"
    assert main(["signs", "--samples", "3000", "--bound", "25", "--seed", "2", "-o", str(signs_path)]) == 0
    signs = json.loads(signs_path.read_text())
    assert signs["distinct"] == len(signs["patterns"])
    assert all(p.endswith("-") for p in signs["negative_h"])
