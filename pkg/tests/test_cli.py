import json
import subprocess
import sys

import jsonschema
import pytest

from esymstab.cli import run

REPORT_SCHEMA = {
    "type": "object",
    "required": ["claim", "parameters", "candidates_checked", "confirmed", "refuted",
                 "witnesses", "details", "passed"],
    "properties": {
        "claim": {"type": "string"},
        "parameters": {"type": "object"},
        "candidates_checked": {"type": "integer", "minimum": 0},
        "confirmed": {"type": "integer", "minimum": 0},
        "refuted": {"type": "integer", "minimum": 0},
        "witnesses": {"type": "array"},
        "details": {"type": "object"},
        "passed": {"type": "boolean"},
    },
}

SCHEMAS = {
    "esym": {"type": "object", "required": ["n", "r", "terms", "polynomial"],
             "properties": {"polynomial": {"type": "string"}, "terms": {"type": "integer"}}},
    "check-stab": {"type": "object", "required": ["stabilizer", "matrix", "polynomial"],
                   "properties": {"stabilizer": {"type": "boolean"},
                                  "matrix": {"type": "array", "items": {"type": "array"}}}},
    "decompose": {"type": "object", "required": ["perm", "omega"],
                  "properties": {"perm": {"type": "array", "items": {"type": "integer"}},
                                 "omega": {"type": ["string", "integer"]}}},
    "enum-stab": {"type": "object", "required": ["count", "elements"],
                  "properties": {"elements": {"type": "array", "items": {
                      "type": "object", "required": ["perm", "k"]}}}},
    "tableaux": {"type": "object", "required": ["shape", "count", "tableaux"],
                 "properties": {"tableaux": {"type": "array", "items": {
                     "type": "object", "required": ["rows", "weight"]}}}},
    "lattice-verify": REPORT_SCHEMA,
    "verify-thm1": REPORT_SCHEMA,
    "rank-lemma": REPORT_SCHEMA,
    "product-stab": REPORT_SCHEMA,
    "mpb-check": REPORT_SCHEMA,
}


@pytest.fixture
def matrices(tmp_path):
    paths = {}
    for name, rows in {
        "transvection": [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        "zeta_cycle": [[0, "zeta(3)", 0, 0], [0, 0, "zeta(3)", 0], [0, 0, 0, "zeta(3)"],
                       ["zeta(3)", 0, 0, 0]],
        "bad": [[1, 2], [3]],
    }.items():
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(rows))
        paths[name] = str(p)
    return paths


def run_json(capsys, *argv):
    code = run(["--format", "json", *argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_enum_stab(capsys):
    code, data = run_json(capsys, "enum-stab", "--n", "4", "--r", "3")
    assert code == 0 and data["count"] == 72 and len(data["elements"]) == 72
    jsonschema.validate(data, SCHEMAS["enum-stab"])


def test_lattice_verify(capsys):
    code, data = run_json(capsys, "lattice-verify", "--n", "4", "--r", "3")
    assert code == 0 and data["details"]["determinant"] == 3 and data["passed"]
    jsonschema.validate(data, SCHEMAS["lattice-verify"])


def test_check_stab_transvection(capsys, matrices):
    code = run(["check-stab", "--n", "4", "--r", "3", "--matrix", matrices["transvection"]])
    assert code == 1 and capsys.readouterr().out.strip() == "false"


def test_check_stab_scaled_cycle(capsys, matrices):
    code, data = run_json(capsys, "check-stab", "--n", "4", "--r", "3",
                          "--matrix", matrices["zeta_cycle"])
    assert code == 0 and data["stabilizer"] is True
    jsonschema.validate(data, SCHEMAS["check-stab"])


def test_check_stab_custom_poly(capsys, matrices):
    code = run(["check-stab", "--n", "4", "--r", "3", "--matrix", matrices["zeta_cycle"],
                "--poly", "X1 + X2 + X3 + X4"])
    assert code == 1


def test_decompose(capsys, matrices):
    code, data = run_json(capsys, "decompose", "--n", "4", "--r", "3",
                          "--matrix", matrices["zeta_cycle"])
    assert code == 0 and data["perm"] == [4, 1, 2, 3] and data["omega"] == "zeta(3)"
    jsonschema.validate(data, SCHEMAS["decompose"])
    code = run(["decompose", "--n", "4", "--r", "3", "--matrix", matrices["transvection"]])
    assert code == 1


def test_esym(capsys):
    code, data = run_json(capsys, "esym", "--n", "4", "--r", "2")
    assert code == 0 and data["terms"] == 6
    assert data["polynomial"] == "X1*X2 + X1*X3 + X2*X3 + X1*X4 + X2*X4 + X3*X4"
    jsonschema.validate(data, SCHEMAS["esym"])


def test_rank_lemma_vector_and_grid(capsys):
    code, data = run_json(capsys, "rank-lemma", "--n", "5", "--r", "3", "--a", "1,1,0,0,0")
    assert code == 0 and data["details"]["rho"] == 2
    jsonschema.validate(data, SCHEMAS["rank-lemma"])
    code, data = run_json(capsys, "rank-lemma", "--n", "4", "--r", "3", "--grid", "1")
    assert code == 0 and data["candidates_checked"] == 81
    jsonschema.validate(data, SCHEMAS["rank-lemma"])


def test_randomized_subcommands(capsys):
    for argv in (["verify-thm1", "--n", "4", "--r", "3", "--trials", "20", "--seed", "3"],
                 ["mpb-check", "--n", "4", "--r", "3", "--trials", "5", "--seed", "3"],
                 ["product-stab", "--n", "5", "--r", "4"]):
        code, data = run_json(capsys, *argv)
        assert code == 0, argv
        jsonschema.validate(data, SCHEMAS[argv[0]])


def test_identical_seeds_give_identical_bytes(capsys):
    argv = ["--format", "json", "verify-thm1", "--n", "4", "--r", "3", "--trials", "30",
            "--seed", "11"]
    run(argv)
    first = capsys.readouterr().out
    run(argv)
    assert capsys.readouterr().out == first


def test_tableaux(capsys):
    code, data = run_json(capsys, "tableaux", "--shape", "2,1", "--max-entry", "3")
    assert code == 0 and data["count"] == 8
    jsonschema.validate(data, SCHEMAS["tableaux"])


@pytest.mark.parametrize("argv", [
    ["verify-thm1", "--n", "4", "--r", "2"],
    ["rank-lemma", "--n", "5", "--r", "3", "--a", "1,x"],
    ["check-stab", "--n", "4", "--r", "3", "--matrix", "/nonexistent.json"],
    ["lattice-verify", "--n", "4", "--r", "4"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(argv) == 2
    assert "esymstab:" in capsys.readouterr().err


def test_bad_matrix_exit_2(capsys, matrices):
    assert run(["check-stab", "--n", "2", "--r", "1", "--matrix", matrices["bad"]]) == 2


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["no-such-command"])
    assert exc.value.code == 2


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "esymstab", "enum-stab", "--n", "3", "--r", "3"],
                         capture_output=True, text=True, check=True).stdout
    assert out.strip().endswith("18 elements")
