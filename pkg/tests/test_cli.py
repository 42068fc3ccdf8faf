import json
import subprocess
import sys

import pytest

from linmatch.cli import main
from linmatch.instance import InstanceError, parse_instance
from linmatch.gf_tower import make_field

WITNESS = {
    "field": {"p": 2, "k": 4, "modulus": [1, 1, 0, 0, 1]},
    "subspaces": {"A": [[1, 0, 0, 0], [0, 1, 1, 0]], "B": [[0, 1, 1, 0], [0, 1, 0, 0]]},
    "bases": {"A": [[1, 0, 0, 0], [0, 1, 1, 0]]},
    "task": "match",
}

AUTO = {
    "field": {"p": 2, "k": 3},
    "B": [[0, 1, 0], [0, 0, 1]],
    "task": "automatch",
}


def write(tmp_path, obj, name="inst.json"):
    path = tmp_path / name
    path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(path)


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_match_witness_exits_one(tmp_path, capsys):
    code, out, _ = run(["match", write(tmp_path, WITNESS)], capsys)
    assert code == 1
    assert json.loads(out) == {"kind": "violation", "J": [1, 2], "vdim": 1, "bound": 0}


def test_automatch_exits_zero(tmp_path, capsys):
    out_file = tmp_path / "cert.json"
    code, out, _ = run(["automatch", write(tmp_path, AUTO), "--json", str(out_file)], capsys)
    assert code == 0
    cert = json.loads(out)
    assert cert["kind"] == "match" and cert["source"] == [[0, 1, 0], [0, 0, 1]]
    assert json.loads(out_file.read_text()) == cert


def test_automatch_with_one_exits_one(tmp_path, capsys):
    inst = dict(AUTO, B=[[0, 1, 0], [1, 1, 0]])
    code, out, _ = run(["automatch", write(tmp_path, inst)], capsys)
    assert code == 1 and json.loads(out)["kind"] == "violation"


def test_strong(tmp_path, capsys):
    inst = {"field": {"p": 2, "k": 2}, "A": [[0, 1]], "B": [[0, 1]], "task": "strong"}
    code, out, _ = run(["strong", write(tmp_path, inst)], capsys)
    assert code == 0 and json.loads(out) == {"kind": "strong", "exists": True}
    sub = dict(WITNESS, subspaces={"A": WITNESS["subspaces"]["A"], "B": WITNESS["subspaces"]["A"]})
    code, out, _ = run(["strong", write(tmp_path, sub)], capsys)
    assert code == 1


@pytest.mark.parametrize(
    "bad",
    [
        "{not json",
        json.dumps(dict(WITNESS, field={"p": 2, "k": 4, "modulus": [1, 0, 1, 0, 1]})),
        json.dumps(dict(WITNESS, field={"p": 4, "k": 2})),
        json.dumps(dict(WITNESS, bases={"A": [[1, 0, 0, 0], [1, 0, 0, 0]]})),
        json.dumps(dict(WITNESS, task="dance")),
        json.dumps({"subspaces": {}}),
        json.dumps(dict(WITNESS, subspaces={"A": [[1, 0, 0]], "B": [[0, 1, 0, 0]]})),
        json.dumps(dict(WITNESS, subspaces={"A": [[1, 0, 0, 0]], "B": [[0, 1, 0, 0], [0, 0, 1, 0]]}, bases={})),
    ],
)
def test_input_errors_exit_two(tmp_path, capsys, bad):
    code, _, err = run(["match", write(tmp_path, bad)], capsys)
    assert code == 2
    assert err.startswith("error")


def test_missing_file_and_bad_field_flag(tmp_path, capsys):
    assert run(["match", str(tmp_path / "nope.json")], capsys)[0] == 2
    assert run(["sweep", "refinement", "--field", "2,4,1,0,1,0,1"], capsys)[0] == 2
    assert run(["sweep", "nonsense"], capsys)[0] == 2
    assert run(["sweep", "refinement"], capsys)[0] == 2


def test_field_flag_overrides_instance(tmp_path, capsys):
    inst = {"B": [[0, 1, 0], [0, 0, 1]], "task": "automatch"}
    code, out, _ = run(["automatch", write(tmp_path, inst), "--field", "2,3,1,1,0,1"], capsys)
    assert code == 0


def test_sweep_refinement_reproducible(tmp_path, capsys):
    argv = ["sweep", "refinement", "--field", "2,9", "--dim", "2", "--samples", "40", "--seed", "7"]
    code1, out1, err1 = run(argv, capsys)
    code2, out2, _ = run(argv, capsys)
    assert code1 == code2 == 0
    assert out1 == out2
    rep = json.loads(out1)
    assert rep["seed"] == 7 and rep["total"] == 40 and rep["failure"] == 0
    assert rep["success"] + rep["failure"] == rep["total"]
    assert "success" in err1 and "duration" in err1
    assert "durationSeconds" not in rep
    code3, out3, _ = run(argv + ["--timing"], capsys)
    assert "durationSeconds" in json.loads(out3)


def test_sweep_tasks_small(capsys):
    cases = [
        ["sweep", "automatch", "--field", "2,3", "--dim", "2"],
        ["sweep", "matchingProperty", "--field", "2,3", "--dim", "2"],
        ["sweep", "matchingProperty", "--field", "2,4", "--dim", "1"],
        ["sweep", "strongMatching", "--field", "2,3", "--dim", "1", "--samples", "3"],
        ["sweep", "olson", "--field", "2,5", "--samples", "30"],
        ["sweep", "groups", "--group", "Z5", "--group", "Z4", "--max-size", "2"],
    ]
    for argv in cases:
        code, out, _ = run(argv, capsys)
        rep = json.loads(out)
        assert code == 0, (argv, rep)
        assert rep["failure"] == 0 and rep["total"] > 0


def test_sweep_failure_exit_code(capsys):
    # Z4 with max size 1 cannot exhibit its counterexample: no contradiction
    code, out, _ = run(["sweep", "groups", "--group", "Z4", "--max-size", "1"], capsys)
    assert code == 0
    # refinement outside its guarantee is an input error
    code, _, _ = run(["sweep", "refinement", "--field", "2,4", "--dim", "2"], capsys)
    assert code == 2


def test_groups_scan(capsys):
    code, out, _ = run(["groups", "scan", "--group", "Z4"], capsys)
    assert code == 0
    assert json.loads(out) == {"group": "Z4", "A": [0, 2], "B": [1, 2], "matching": None}
    code, out, _ = run(["groups", "scan", "--group", "Z5"], capsys)
    assert json.loads(out)["counterexample"] is None


def test_guard_exit_code(capsys):
    code, _, err = run(["sweep", "automatch", "--field", "2,4", "--dim", "2", "--cap", "5"], capsys)
    assert code == 2 and "cap" in err


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "linmatch", "match", write(tmp_path, WITNESS)], capture_output=True, text=True
    )
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["J"] == [1, 2]


def test_parse_instance_defaults():
    inst = parse_instance({"field": {"p": 2, "k": 3}, "A": [[1, 0, 0]]})
    assert inst.task == "match"
    assert inst.field == make_field(2, 3)
    assert inst.basis_of("A").to_json() == [[1, 0, 0]]
    with pytest.raises(InstanceError):
        inst.subspace("B")
