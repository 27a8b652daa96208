import json
import subprocess
import sys

import pytest

from hopfeq import catalog, serialize
from hopfeq.cli import main
from hopfeq.errors import FieldMismatch
from hopfeq.exactlin import Field


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    d = tmp_path_factory.mktemp("examples")
    for name in catalog.names():
        serialize.dump(catalog.builtin(name), d / f"{name}.json")
    return d


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_every_example_file_validates(files, capsys):
    for name in catalog.names():
        code, rep = run(capsys, "check", files / f"{name}.json")
        bad = name in ("dual-numbers-h4-bad", "ab-algebra-s3-swapped")
        assert code == (1 if bad else 0), name
        assert rep["version"] and rep["field"]


def test_example_roundtrip_through_parser(files):
    for name in catalog.names():
        obj = serialize.load(files / f"{name}.json")
        assert serialize.dumps(obj) == serialize.dumps(catalog.builtin(name))


def test_equiv_gradings(files, capsys):
    code, rep = run(capsys, "equiv", "--kind", "grading", files / "ab-algebra-s3.json",
                    files / "ab-algebra-z4.json", "--iso", "identity")
    assert code == 0
    assert rep["certificate"]["bijection_names"] == {"id": "0", "(12)": "1", "(23)": "2", "(123)": "3"}


def test_equiv_false_and_iso_file(files, capsys, tmp_path):
    code, _ = run(capsys, "equiv", files / "m2-z2-grading.json", files / "m2-trivial-grading.json")
    assert code == 1
    iso = tmp_path / "iso.json"
    iso.write_text(json.dumps({"matrix": [[1, 0], [0, 4]]}))
    code, rep = run(capsys, "equiv", files / "dual-numbers-h4.json", files / "dual-numbers-h4.json", "--iso", iso)
    assert code == 0 and rep["equivalent"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([[2, 0], [0, 1]]))
    code, rep = run(capsys, "equiv", files / "dual-numbers-h4.json", files / "dual-numbers-h4.json", "--iso", bad)
    assert code == 2


def test_classify(files, capsys):
    for name, case in [("dual-numbers-trivial", 1), ("dual-numbers-z2", 2), ("dual-numbers-h4", 3)]:
        code, rep = run(capsys, "classify-dual", files / f"{name}.json")
        assert code == 0 and rep["case"] == case
    code, rep = run(capsys, "classify-dual", files / "dual-numbers-h4-bad.json")
    assert code == 1 and rep["status"] == "fail"


def test_codim_budget_exit(files, capsys):
    code, rep = run(capsys, "codim", "--n", 7, files / "dual-numbers-h4.json")
    assert code == 3 and rep["status"] == "budget-exceeded"
    code, rep = run(capsys, "codim", "--n", 3, files / "dual-numbers-h4.json")
    assert code == 0 and rep["codim"] == [3, 7, 15]


def test_codim_budget_from_environment(files, capsys, monkeypatch):
    monkeypatch.setenv("HOPFEQ_BUDGET", "50")
    code, _ = run(capsys, "codim", "--n", 3, files / "dual-numbers-h4.json")
    assert code == 3


def test_usage_errors(files, capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "check", files / "m2.json", "--bogus")[0] == 2
    assert run(capsys, "check", "/nonexistent.json")[0] == 2
    assert run(capsys, "example", "no-such-example")[0] == 2


def test_parse_error(tmp_path, capsys):
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    assert run(capsys, "check", p)[0] == 2
    p.write_text(json.dumps({"kind": "algebra", "field": "Q", "mult": [[[1, 0]]]}))
    assert run(capsys, "check", p)[0] == 2


def test_field_override(files, capsys):
    code, rep = run(capsys, "check", files / "sweedler.json", "--field", "Fp:3")
    assert code == 0 and rep["field"] == {"kind": "Fp", "p": 3}
    code, rep = run(capsys, "check", files / "dual-numbers-z4-grading.json", "--field", "Q")
    assert code == 2
    with pytest.raises(FieldMismatch):
        serialize.load(files / "dual-numbers-z4-grading.json", field=Field.Fp(7))


@pytest.mark.parametrize("argv, code", [
    (["support-coalgebra", "regular-h4.json"], 0),
    (["universal-group", "m2-z2-grading.json"], 0),
    (["universal-hopf", "regular-z2.json"], 0),
    (["detect-grading", "m2-z2-coaction.json"], 0),
    (["detect-grading", "regular-h4.json"], 1),
    (["can", "regular-h4.json"], 0),
    (["can", "m2-trivial-coaction.json"], 1),
    (["can", "regular-dual-h4.json"], 0),
    (["correspondence", "dual-numbers-h4.json"], 0),
    (["correspondence", "ab-algebra-s3-coaction.json"], 0),
    (["cocomm-data", "dual-numbers-z2.json"], 0),
    (["obstruction", "ab-algebra-s3-dual.json", "--h", "h_(123)", "--a", "a", "--b", "b"], 0),
    (["obstruction", "ab-algebra-z4-dual.json"], 1),
    (["graded-codim", "--n", "2", "m2-z2-grading.json"], 0),
    (["regular-dual", "sweedler.json"], 0),
    (["finer", "m2-z2-grading.json", "m2-trivial-grading.json"], 0),
    (["finer", "m2-trivial-coaction.json", "m2-z2-coaction.json"], 1),
])
def test_verbs(files, capsys, argv, code):
    args = [files / a if a.endswith(".json") else a for a in argv]
    got, rep = run(capsys, *args)
    assert got == code, rep


def test_obstruction_report(files, capsys):
    _, rep = run(capsys, "obstruction", files / "ab-algebra-s3-dual.json", "--h", "h_(123)", "--a", "a", "--b", "b")
    assert rep["first_named"] == {"ab": 1} and rep["second_named"] == {}


def test_universal_group_report(files, capsys):
    _, rep = run(capsys, "universal-group", files / "m2-z2-grading.json")
    assert rep["order"]["order"] == 2
    assert rep["presentation"]["abelianization"] == [2]


def test_reports_are_deterministic(files):
    argv = [sys.executable, "-m", "hopfeq.cli", "equiv", str(files / "ab-algebra-s3.json"),
            str(files / "ab-algebra-z4.json"), "--iso", "identity"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b
    json.loads(a)


def test_example_out_dir(tmp_path, capsys):
    code, rep = run(capsys, "example", "sweedler", "--out", tmp_path)
    assert code == 0
    code, rep = run(capsys, "check", tmp_path / "sweedler.json")
    assert code == 0


def test_out_option(files, tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["check", str(files / "m2.json"), "--out", str(out)]) == 0
    assert json.loads(out.read_text())["status"] == "pass"
