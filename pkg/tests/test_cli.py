import json
import subprocess
import sys

import jsonschema
import numpy as np
import pytest

from qtruth.cli import load_model, matrix_to_json, parse_complex
from qtruth.schemas import (
    EVAL_OUTPUT_SCHEMA, MODEL_SCHEMA, SCENARIO_OUTPUT_SCHEMA, TABLE_OUTPUT_SCHEMA,
)
from qtruth.semantics import PhaseSpaceModel, ProjectorAssignment


def run(*args):
    return subprocess.run([sys.executable, "-m", "qtruth", *args],
                          capture_output=True, text=True, timeout=60)


def write_model(tmp_path, data, name="model.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


XPLUS = [[[0.5, 0], [0.5, 0]], [[0.5, 0], [0.5, 0]]]
ZPLUS = [[[1, 0], [0, 0]], [[0, 0], [0, 0]]]


# ---------------------------------------------------------------- eval

def test_eval_tarski_zero_copy():
    r = run("eval", "--semantics", "tarski", "--formula", "D2R & D3R", "--model", "scenario")
    assert r.returncode == 0
    assert r.stdout.strip() == "FALSE (copy = P_⊥)"


def test_eval_tarski_gap():
    r = run("eval", "--semantics", "tarski", "--formula", "D1R & D2R", "--model", "scenario")
    assert r.returncode == 0
    assert r.stdout.strip() == "GAP (no unique copy)"


def test_eval_tarski_merge_u():
    r = run("eval", "--semantics", "tarski", "--formula", "D1R & D2R", "--model", "scenario",
            "--merge-u")
    assert r.stdout.strip() == "U (no unique copy)"


def test_eval_tarski_with_state_and_json():
    r = run("eval", "--semantics", "tarski", "--formula", "D2R", "--model", "scenario",
            "--state", "1,0", "--format", "json")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    jsonschema.validate(out, EVAL_OUTPUT_SCHEMA)
    assert out["verdict"] == "INDETERMINATE"
    assert np.allclose([[x[0] for x in row] for row in out["copy"]], 0.5)


def test_eval_quantum_user_model(tmp_path):
    path = write_model(tmp_path, {"dimension": 2, "atoms": {"A": XPLUS}})
    r = run("eval", "--semantics", "quantum", "--formula", "A | !A", "--model", path)
    assert r.returncode == 0
    assert r.stdout.strip() == "TAUTOLOGY"


def test_eval_quantum_with_model_state(tmp_path):
    s = 2 ** -0.5
    path = write_model(tmp_path, {"dimension": 2, "atoms": {"A": ZPLUS, "B": XPLUS},
                                  "state": [[s, 0], [s, 0]]})
    r = run("eval", "--semantics", "quantum", "--formula", "A -> B", "--model", path)
    assert r.returncode == 0
    # Sasaki hook of two distinct rays is the complement of the first
    assert r.stdout.strip() == "CONTINGENT (at state: INDETERMINATE)"
    r = run("eval", "--semantics", "quantum", "--formula", "B", "--model", path)
    assert r.stdout.strip() == "CONTINGENT (at state: TRUE)"


def test_eval_classical_and_trivalent():
    r = run("eval", "--semantics", "classical", "--formula", "(A -> B) <-> (!A | B)")
    assert r.stdout.strip() == "TAUTOLOGY"
    r = run("eval", "--semantics", "classical", "--formula", "A & !A")
    assert r.stdout.strip() == "CONTRADICTION"
    r = run("eval", "--semantics", "classical", "--formula", "A -> B", "--assign", "A=t,B=f")
    assert r.stdout.strip() == "FALSE"
    r = run("eval", "--semantics", "trivalent", "--formula", "A | B", "--assign", "A=u,B=t")
    assert r.stdout.strip() == "U"
    r = run("eval", "--semantics", "trivalent", "--formula", "A | B", "--assign", "A=f,B=t")
    assert r.stdout.strip() == "TRUE"


def test_eval_phase(tmp_path):
    path = write_model(tmp_path, {"phase": {"points": ["q1", "q2", "q3"],
                                            "atoms": {"S": ["q1"], "R": ["q1", "q2"]}}})
    r = run("eval", "--semantics", "phase", "--formula", "!S", "--model", path)
    assert r.returncode == 0 and r.stdout.strip() == "CONTINGENT (points = {q2, q3})"
    r = run("eval", "--semantics", "phase", "--formula", "S -> R", "--model", path)
    assert r.stdout.startswith("TAUTOLOGY")
    r = run("eval", "--semantics", "phase", "--formula", "S & R", "--model", path,
            "--point", "q1", "--format", "json")
    out = json.loads(r.stdout)
    jsonschema.validate(out, EVAL_OUTPUT_SCHEMA)
    assert out["verdict"] == "TRUE" and out["points"] == ["q1"]


# ---------------------------------------------------------------- input errors

@pytest.mark.parametrize("args, needle", [
    (["eval", "--semantics", "classical", "--formula", "A & (B"], "position 6"),
    (["eval", "--semantics", "quantum", "--formula", "A", "--model", "/no/such.json"],
     "not found"),
    (["eval", "--semantics", "quantum", "--formula", "A"], "--model"),
    (["eval", "--semantics", "phase", "--formula", "A", "--model", "scenario"], "phase"),
    (["eval", "--semantics", "quantum", "--formula", "Q", "--model", "scenario"], "'Q'"),
    (["eval", "--semantics", "tarski", "--formula", "D1R = D2R", "--model", "scenario"],
     "identity"),
    (["eval", "--semantics", "tarski", "--formula", "D1R", "--model", "scenario",
      "--state", "1,1"], "unit norm"),
    (["eval", "--semantics", "tarski", "--formula", "D1R", "--model", "scenario",
      "--state", "1,0,0"], "dimension"),
    (["eval", "--semantics", "trivalent", "--formula", "A"], "--assign"),
    (["eval", "--semantics", "classical", "--formula", "A", "--assign", "A=u"], "trivalent"),
])
def test_input_errors_exit_2(args, needle):
    r = run(*args)
    assert r.returncode == 2, r.stdout
    assert needle in r.stderr


def test_bad_tolerance_is_rejected():
    r = run("eval", "--semantics", "classical", "--formula", "A", "--tolerance", "0.5")
    assert r.returncode == 2


def test_model_not_a_projector(tmp_path):
    path = write_model(tmp_path, {"dimension": 2, "atoms": {"Bad": [[[2, 0], [0, 0]],
                                                                     [[0, 0], [0, 0]]]}})
    r = run("eval", "--semantics", "quantum", "--formula", "Bad", "--model", path)
    assert r.returncode == 2
    assert "atoms.Bad" in r.stderr and "idempotent" in r.stderr


def test_model_phase_subset_outside_points(tmp_path):
    path = write_model(tmp_path, {"phase": {"points": ["a"], "atoms": {"S": ["a", "z"]}}})
    r = run("eval", "--semantics", "phase", "--formula", "S", "--model", path)
    assert r.returncode == 2 and "unknown points" in r.stderr


@pytest.mark.parametrize("data, field", [
    ({"dimension": 2}, "exactly one"),
    ({"dimension": 2, "atoms": {"A": ZPLUS}, "phase": {"points": [], "atoms": {}}},
     "exactly one"),
    ({"dimension": 0, "atoms": {}}, "dimension"),
    ({"dimension": 3, "atoms": {"A": ZPLUS}}, "atoms.A"),
    ({"dimension": 2, "atoms": {"A": [[1, 0], [0, 0]]}}, "atoms.A"),
    ({"dimension": 2, "atoms": {"A": ZPLUS}, "state": [[1, 0], [1, 0]]}, "state"),
    ({"dimension": 2, "atoms": {"A": ZPLUS}, "extra": 1}, "unknown field"),
    ({"dimension": 2, "atoms": {"T": ZPLUS}}, "atoms.T"),
])
def test_model_validation_names_field(tmp_path, data, field):
    from qtruth.cli import InputError
    with pytest.raises(InputError, match=field.replace(".", r"\.")):
        load_model(write_model(tmp_path, data))


def test_model_invalid_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    r = run("eval", "--semantics", "quantum", "--formula", "A", "--model", str(path))
    assert r.returncode == 2 and "invalid JSON" in r.stderr


# ---------------------------------------------------------------- load_model

def test_load_builtin_scenario():
    m = load_model("scenario")
    assert isinstance(m.assignment, ProjectorAssignment)
    assert m.assignment.dim == 2 and len(m.assignment.projectors) == 5
    m4 = load_model("scenario4")
    assert m4.assignment.dim == 4 and m4.state is not None
    assert np.linalg.norm(m4.state) == pytest.approx(1.0)


def test_load_roundtrip_and_schema(tmp_path):
    s = 2 ** -0.5
    data = {"dimension": 2, "atoms": {"A": XPLUS, "B": matrix_to_json(np.diag([0, 1]))},
            "state": [[s, 0], [0, s]]}
    jsonschema.validate(data, MODEL_SCHEMA)
    m = load_model(write_model(tmp_path, data))
    assert np.allclose(m.assignment["B"].matrix, np.diag([0, 1]))
    assert np.allclose(m.state, [s, 1j * s])
    phase = {"phase": {"points": ["a", "b"], "atoms": {"S": ["a"]}}}
    jsonschema.validate(phase, MODEL_SCHEMA)
    assert isinstance(load_model(write_model(tmp_path, phase, "p.json")).phase, PhaseSpaceModel)


def test_parse_complex():
    assert parse_complex("0.5") == 0.5
    assert parse_complex("1-2i") == 1 - 2j
    assert parse_complex("0.8i") == 0.8j
    assert parse_complex([0.1, -0.2]) == 0.1 - 0.2j
    with pytest.raises(ValueError):
        parse_complex("abc")


# ---------------------------------------------------------------- table

def test_table_trivalent_negation():
    r = run("table", "--semantics", "trivalent", "--formula", "!A")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert len(lines) == 4  # header + 3 rows
    assert lines[-1].split() == ["u", "|", "u"]


def test_table_classical_conditional_json():
    r = run("table", "--semantics", "classical", "--formula", "A -> B", "--format", "json")
    out = json.loads(r.stdout)
    jsonschema.validate(out, TABLE_OUTPUT_SCHEMA)
    assert len(out["rows"]) == 4
    false_rows = [row["valuation"] for row in out["rows"] if row["value"] == "f"]
    assert false_rows == [{"A": "t", "B": "f"}]


def test_table_trivalent_disjunction_json():
    r = run("table", "--semantics", "trivalent", "--formula", "A | B", "--format", "json")
    out = json.loads(r.stdout)
    jsonschema.validate(out, TABLE_OUTPUT_SCHEMA)
    assert len(out["rows"]) == 9
    row = next(x for x in out["rows"] if x["valuation"] == {"A": "u", "B": "t"})
    assert row["value"] == "u"


def test_table_atom_limit():
    formula = " & ".join(f"X{i}" for i in range(9))
    r = run("table", "--semantics", "classical", "--formula", formula)
    assert r.returncode == 2 and "bound of 8" in r.stderr


# ---------------------------------------------------------------- scenario

def test_scenario_all_exit_zero():
    r = run("scenario", "all")
    assert r.returncode == 0, r.stdout
    assert "[FAIL]" not in r.stdout


def test_scenario_paradox_json():
    r = run("scenario", "paradox", "--format", "json")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    jsonschema.validate(out, SCENARIO_OUTPUT_SCHEMA)
    assert out["ok"] and out["reports"][0]["name"] == "paradox"
    assert all(c["passed"] for c in out["reports"][0]["checks"])


def test_scenario_copenhagen_branch_two_vacuous():
    r = run("scenario", "copenhagen", "--b1", "1", "--b2", "0", "--format", "json")
    assert r.returncode == 0
    checks = json.loads(r.stdout)["reports"][0]["checks"]
    branch2 = [c for c in checks if c["label"].startswith("branch 2")]
    assert branch2 and all(c["computed"] == "VACUOUS" for c in branch2)


@pytest.mark.parametrize("part, semantics", [("quantum", {"quantum"}),
                                              ("tarski", {"tarski", "tarski+trivalent"})])
def test_scenario_parts_filter_by_semantics(part, semantics):
    r = run("scenario", part, "--format", "json")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    jsonschema.validate(out, SCENARIO_OUTPUT_SCHEMA)
    assert {c["semantics"] for c in out["reports"][0]["checks"]} == semantics


def test_scenario_complex_amplitudes_and_lifted():
    r = run("scenario", "all", "--b1", "0.6", "--b2", "0.8i", "--lifted")
    assert r.returncode == 0, r.stdout


def test_scenario_bad_amplitudes():
    r = run("scenario", "copenhagen", "--b1", "1", "--b2", "1")
    assert r.returncode == 2 and "expected 1" in r.stderr


def test_scenario_failure_gives_exit_1(monkeypatch, capsys):
    from qtruth import cli
    from qtruth import scenario as sc

    def broken():
        r = sc.ScenarioReport("phase", "broken")
        r.add("always fails", [], "phase", "-", "TRUE", "FALSE")
        return r

    monkeypatch.setattr(sc, "phase_space_demo", broken)
    assert cli.main(["scenario", "phase"]) == 1
    assert "[FAIL] always fails" in capsys.readouterr().out
