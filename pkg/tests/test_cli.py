import json

import pytest

from rank2crystal.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_orbit(capsys):
    code, out, _ = run(capsys, "orbit", "--m-min", "-2", "--m-max", "3")
    assert code == 0
    rows = [line.split("\t") for line in out.strip().split("\n")[1:]]
    assert [r[2] for r in rows] == ["5", "2", "1", "1", "2", "5"]
    assert [r[3] for r in rows] == ["alpha2", "alpha1", "alpha2", "alpha1", "alpha2", "alpha1"]


def test_orbit_empty_range(capsys):
    code, out, _ = run(capsys, "orbit", "--m-min", "1", "--m-max", "0")
    assert code == 0 and out.strip().count("\n") == 0


def test_invalid_shape(capsys):
    code, _, err = run(capsys, "orbit", "--k1", "2", "--k2", "1")
    assert code == 1 and "case I" in err


def test_graph_formats(capsys, tmp_path):
    code, out, _ = run(capsys, "graph", "--depth", "1", "--format", "json")
    assert code == 0
    body = json.loads(out)
    assert set(body) == {"config", "vertices", "edges"}
    assert len(body["vertices"]) == 3
    code, out, _ = run(capsys, "graph", "--depth", "0", "--format", "dot")
    assert out.startswith("digraph") and "->" not in out
    target = tmp_path / "g.dot"
    assert run(capsys, "graph", "--out", str(target))[0] == 0
    first = target.read_bytes()
    run(capsys, "graph", "--out", str(target))
    assert target.read_bytes() == first


def test_mult(capsys):
    code, out, _ = run(capsys, "mult", "--n-max", "2")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "n1\tn2\tmult"
    table = {(int(a), int(b)): int(c) for a, b, c in (l.split("\t") for l in lines[1:])}
    assert table[(0, 0)] == 1 and table[(1, 1)] == 1 and table[(2, 2)] == 2
    assert table[(1, 0)] == 1
    code, _, err = run(capsys, "mult", "--a1", "3", "--a2", "4")
    assert code == 1 and "symmetric" in err


def test_f_table(capsys):
    code, out, _ = run(capsys, "f-table", "--x-max", "5")
    rows = [l.split("\t") for l in out.strip().split("\n")[1:]]
    assert code == 0
    assert [r[1] for r in rows] == ["0", "2", "5", "7", "10", "13"]
    assert all(r[-1] == "true" for r in rows)
    assert rows[0][1] == rows[0][3] == "0"


@pytest.mark.parametrize("a", [3, 4])
def test_verify_passes(capsys, a):
    code, out, _ = run(capsys, "verify", "--a1", str(a), "--a2", str(a), "--depth", "6")
    assert code == 0 and json.loads(out)["ok"]


def test_verify_corrupted(capsys):
    code, out, err = run(capsys, "verify", "--depth", "3", "--corrupt-theta")
    assert code == 2
    assert "first failing check" in err
    assert not json.loads(out)["ok"]


def test_io_errors(capsys, tmp_path):
    assert run(capsys, "graph", "--out", str(tmp_path / "no" / "x.dot"))[0] == 3
    assert run(capsys, "graph", "--json", str(tmp_path / "missing.json"))[0] == 3


def test_json_config(capsys, tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"a1": 4, "a2": 4, "depth": 1, "format": "json"}))
    code, out, _ = run(capsys, "graph", "--json", str(cfg))
    assert code == 0 and json.loads(out)["config"]["a1"] == 4
    code, out, _ = run(capsys, "graph", "--json", str(cfg), "--a1", "3", "--a2", "3")
    assert json.loads(out)["config"]["a1"] == 3
    cfg.write_text(json.dumps({"bogus": 1}))
    assert run(capsys, "graph", "--json", str(cfg))[0] == 1
