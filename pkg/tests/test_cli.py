import json
import os
import subprocess
import sys

import jsonschema
import pytest

from wlpositroid.cli import main

EIGHT = '{"n": 8, "propagators": [[1,4],[2,4],[5,7],[5,8]]}'
SEVEN = '{"n": 7, "propagators": [[1,6],[1,5],[1,4]]}'

INT_LIST = {"type": "array", "items": {"type": "integer"}}
PAIR = {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}
SCHEMAS = {
    "diagram": {
        "type": "object", "required": ["n", "propagators"],
        "properties": {"n": {"type": "integer"}, "propagators": {"type": "array", "items": PAIR}},
    },
    "necklace": {
        "type": "object", "required": ["k", "n", "terms", "assignments"],
        "properties": {
            "terms": {"type": "array", "items": INT_LIST},
            "assignments": {"type": "array", "items": {"type": "array", "items": {
                "type": "object", "required": ["prop", "vertex"],
                "properties": {"prop": PAIR, "vertex": {"type": "integer"}}}}},
        },
    },
    "le": {
        "type": "object", "required": ["row_labels", "shape", "plus_cells"],
        "properties": {"row_labels": INT_LIST, "shape": INT_LIST,
                       "plus_cells": {"type": "array", "items": PAIR}},
    },
    "check": {"type": "object", "required": ["ok", "violations"]},
    "bases": {"type": "array", "items": INT_LIST},
    "denom": {
        "type": "object",
        "required": ["R_definition", "R_necklace", "S_sets", "r_factors", "deltas", "checks"],
    },
}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_necklace_json(capsys, tmp_path):
    f = tmp_path / "eight.json"
    f.write_text(EIGHT)
    code, out, _ = run(capsys, "necklace", str(f))
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, SCHEMAS["necklace"])
    assert ["".join(map(str, t)) for t in data["terms"]] == [
        "1235", "2356", "3456", "4567", "5671", "6712", "7812", "8123"]


def test_denom_letters(capsys):
    code, out, _ = run(capsys, "denom", SEVEN, "--format", "text", "--letters")
    assert code == 0
    assert sorted(out.strip().split("*")) == sorted("(af-be) k g b c l h d i (ej-fi)".split())
    code, out, _ = run(capsys, "denom", SEVEN, "--display", "--letters")
    assert sorted(out.strip().split("*")) == sorted("(af-be) k g b c l h d i (ej-fi)".split())


def test_check_crossing(capsys):
    code, out, _ = run(capsys, "check", '{"n": 7, "propagators": [[1,3],[2,4]]}')
    assert code == 1
    data = json.loads(out)
    jsonschema.validate(data, SCHEMAS["check"])
    assert data["violations"] == [{"kind": "Crossing", "witness": [[1, 3], [2, 4]]}]


def test_domain_error_on_inadmissible(capsys):
    code, _, _ = run(capsys, "necklace", '{"n": 5, "propagators": [[1,3],[3,5]]}')
    assert code == 1


def test_usage_errors(capsys):
    assert run(capsys, "necklace", '{"n": 8,')[0] == 2
    assert run(capsys, "necklace", "/no/such/file.json")[0] == 2
    assert run(capsys, "necklace", '{"n": "x"}')[0] == 2
    assert run(capsys, "enumerate", "--k", "3", "--n", "5")[0] == 2
    assert run(capsys, "denom", SEVEN, "--order", "[[1,6]]")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


@pytest.mark.parametrize("cmd,schema", [
    ("le", "le"), ("bases", "bases"), ("denom", "denom"), ("check", "check"),
])
def test_outputs_match_schemas(capsys, cmd, schema):
    code, out, _ = run(capsys, cmd, EIGHT)
    assert code == 0
    jsonschema.validate(json.loads(out), SCHEMAS[schema])


def test_enumerate_round_trip(capsys):
    code, out, _ = run(capsys, "enumerate", "--k", "1", "--n", "6")
    data = json.loads(out)
    assert len(data) == 9
    for d in data:
        jsonschema.validate(d, SCHEMAS["diagram"])
        assert run(capsys, "check", json.dumps(d))[0] == 0


def test_text_outputs(capsys):
    assert "+" in run(capsys, "le", EIGHT, "--format", "text")[1]
    assert "x_{1,1}" in run(capsys, "cmatrix", SEVEN, "--format", "text")[1]
    assert run(capsys, "dim", EIGHT, "--format", "text")[1].startswith("dimension 12")
    assert "I_5 = {5,6,7,1}" in run(capsys, "necklace", EIGHT, "--format", "text")[1]


def test_deterministic(capsys):
    a = run(capsys, "denom", EIGHT)[1]
    b = run(capsys, "denom", EIGHT)[1]
    assert a == b


def test_selftest_small(capsys):
    code, out, _ = run(capsys, "selftest", "--max-n", "6", "--random", "3", "--format", "text")
    assert code == 0 and "FAIL" not in out and out.count("PASS") == 10


def test_module_entry_point_and_stdin():
    env = dict(os.environ)
    r = subprocess.run([sys.executable, "-m", "wlpositroid", "dim", "-"], input=EIGHT,
                       capture_output=True, text=True, env=env)
    assert r.returncode == 0 and json.loads(r.stdout)["plus_count"] == 12
