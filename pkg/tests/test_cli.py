import io
import json

import pytest

from toricbord import cli
from toricbord.families import L
from toricbord.quasitoric import CharacteristicPair


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_s_number_from_flags_and_spec():
    assert call("s-number", "--family", "L", "--n1", "0", "--n2", "3")[:2] == (0, "4\n")
    assert call("s-number", "tildeN(2,3)")[:2] == (0, "14\n")
    code, out, _ = call("s-number", "tildeL(2,3)", "--json")
    assert code == 0
    assert json.loads(out) == {"name": "tildeL(2,3)", "n": 5, "localization": 5, "cohomology": 5, "agree": True}


def test_chern_number():
    code, out, _ = call("chern", "--family", "product", "--factor", "cpn(1)", "--factor", "cpn(1)",
                        "--omega", "0,1", "--json")
    assert code == 0 and json.loads(out)["localization"] == 4
    code, out, _ = call("chern", "cpn(2)", "--omega", "2")
    assert code == 0 and out.startswith("c_[2, 0][cpn(2)] = 9")


def test_su_check():
    assert call("su-check", "cpn(3)")[:2] == (0, "none\n")
    code, out, _ = call("su-check", "--family", "tildeL", "--n1", "2", "--n2", "1", "--json")
    data = json.loads(out)
    assert code == 0 and data["su"] and len(data["phi"]) == 3


def test_descriptor_round_trip(tmp_path):
    path = tmp_path / "l12.json"
    code, _, _ = call("family", "L(1,2)", "--out", str(path))
    assert code == 0
    assert CharacteristicPair.from_json(path.read_text()) == L(1, 2).pair
    assert call("s-number", str(path))[1] == call("s-number", "L(1,2)")[1]


def test_descriptor_s_number_matches(tmp_path):
    path = tmp_path / "m.json"
    call("family", "tildeN(2,3)", "--out", str(path))
    code, out, _ = call("s-number", str(path), "--json")
    assert code == 0 and json.loads(out) == {"name": "tildeN(2,3)", "n": 6, "localization": 14}


def test_connected_sum(tmp_path):
    a = tmp_path / "a.json"
    call("family", "L(1,2)", "--out", str(a))
    out_path = tmp_path / "sum.json"
    code, out, _ = call("connected-sum", str(a), "L(1,2)", "--out", str(out_path))
    assert code == 0 and "wrote" in out
    pair = CharacteristicPair.from_json(out_path.read_text())
    assert pair.n == 3
    code, _, err = call("connected-sum", str(a), str(a), "--vertex-a", "99")
    assert code == 2 and "out of range" in err


def test_verify_passes():
    code, out, _ = call("verify", "lowdimqt")
    assert code == 0 and out.rstrip().endswith("PASS")
    code, out, _ = call("verify", "lemma1", "--max", "6", "--json")
    data = json.loads(out)
    assert code == 0 and data["failures"] == [] and data["checked"] > 0


def test_verify_reports_counterexamples(monkeypatch):
    from toricbord import sweeps

    def fake(bound):
        res = sweeps.SweepResult("fake")
        res.record([1], False, {"value": 1})
        return res

    monkeypatch.setitem(sweeps.SWEEPS, "lemma1", (fake, 1))
    code, out, _ = call("verify", "lemma1")
    assert code == 1 and "counterexample" in out


def test_generators():
    code, out, _ = call("generators", "--dim", "12", "--su")
    assert code == 0 and out.startswith("[tildeN(2,3)]") and "s=14" in out
    code, out, _ = call("generators", "--dim", "6", "--json")
    assert code == 0 and json.loads(out)["target"] == 2


def test_generators_realize(tmp_path):
    path = tmp_path / "y8.json"
    code, out, _ = call("generators", "--dim", "16", "--su", "--realize", str(path), "--json")
    data = json.loads(out)
    assert code == 0 and data["realized"]["s"] == 12
    assert CharacteristicPair.from_json(path.read_text()).n == 8


def test_wall():
    code, out, _ = call("wall", "2*x4 - x1*x3", "--json")
    assert code == 0 and json.loads(out) == {"element": "-x1*x3 + 2*x4", "degree": 8, "boundary": "0"}


@pytest.mark.parametrize("argv", [
    ("generators", "--dim", "7"),
    ("s-number",),
    ("s-number", "nope(1)"),
    ("s-number", "/nonexistent/file.json"),
    ("chern", "cpn(2)", "--omega", "1,1,1"),
    ("wall", "x2"),
    ("s-number", "--family", "L", "--n1", "1"),
    ("bogus-verb",),
])
def test_usage_errors(argv):
    code, _, err = call(*argv)
    assert code == 2


def test_json_errors_are_machine_readable():
    code, out, _ = call("s-number", "nope(1)", "--json")
    assert code == 2 and "error" in json.loads(out)


def test_invalid_descriptor(tmp_path):
    data = L(1, 1).pair.to_dict()
    data["lambda"][0][0] = 5
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    assert call("s-number", str(path))[0] == 2
    path.write_text("{not json")
    assert call("s-number", str(path))[0] == 2


def test_help_exits_cleanly(capsys):
    assert cli.run(["--help"]) == 0
