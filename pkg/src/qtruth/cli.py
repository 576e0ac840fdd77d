"""Command-line front end.

Exit codes: 0 evaluated / all checks passed, 1 scenario check failures,
2 input or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import hilbert as hb
from . import scenario as sc
from .formula import FormulaSyntaxError, MissingAtomError, TooManyAtomsError, eval2, parse, render
from .formula import atoms as formula_atoms
from .formula import truth_table
from .hilbert import DEFAULT_TOL, Projector
from .semantics import (
    GAP, IdentityUnsupportedError, PhaseSpaceModel, ProjectorAssignment, SemanticVerdict,
    UnknownPointError, phase_eval, ql_copy, tarski_copy, tsentence_eval,
)
from .trivalent import TruthValue3, eval3, truth_table3

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2
TABLE_MAX_ATOMS = 8
SEMANTICS = ("classical", "trivalent", "quantum", "tarski", "phase")
BUILTIN_MODELS = ("scenario", "scenario4")


class InputError(Exception):
    """Bad user input; reported on stderr with exit code 2."""


# ---------------------------------------------------------------- model files

@dataclass(frozen=True)
class Model:
    assignment: ProjectorAssignment | None = None
    phase: PhaseSpaceModel | None = None
    state: np.ndarray | None = None


def parse_complex(text) -> complex:
    """``"0.5"``, ``"1-2i"``, ``"3j"`` or a ``[re, im]`` pair -> complex."""
    if isinstance(text, (list, tuple)):
        if len(text) != 2 or not all(isinstance(x, (int, float)) for x in text):
            raise ValueError(f"complex number must be a [re, im] pair, got {text!r}")
        return complex(text[0], text[1])
    if isinstance(text, (int, float)):
        return complex(text)
    s = str(text).strip().replace(" ", "")
    if s.endswith("i"):
        s = s[:-1] + "j"
    return complex(s)


def parse_state(text: str) -> np.ndarray:
    return np.array([parse_complex(x) for x in text.split(",")], dtype=complex)


def _pair(x, where: str) -> complex:
    # model files always spell complex numbers as [re, im]
    if not isinstance(x, list):
        raise InputError(f"{where}: complex entries must be [re, im] pairs, got {x!r}")
    try:
        return parse_complex(x)
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from None


def _matrix_from_json(value, where: str) -> np.ndarray:
    if not isinstance(value, list) or not value or not all(isinstance(row, list) for row in value):
        raise InputError(f"{where}: expected a nonempty list of rows of [re, im] pairs")
    if len({len(row) for row in value}) != 1:
        raise InputError(f"{where}: rows have different lengths")
    return np.array([[_pair(x, where) for x in row] for row in value], dtype=complex)


def matrix_to_json(m: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(m)]


def model_from_dict(data, tol: float = DEFAULT_TOL) -> Model:
    if not isinstance(data, dict):
        raise InputError("model: top level must be a JSON object")
    unknown = set(data) - {"dimension", "atoms", "state", "phase"}
    if unknown:
        raise InputError(f"model: unknown field(s) {sorted(unknown)}")
    has_atoms, has_phase = "atoms" in data, "phase" in data
    if has_atoms == has_phase:
        raise InputError("model: exactly one of 'atoms' or 'phase' must be present")

    if has_phase:
        phase = data["phase"]
        if not isinstance(phase, dict) or set(phase) != {"points", "atoms"}:
            raise InputError("phase: must be an object with exactly 'points' and 'atoms'")
        points, sets = phase["points"], phase["atoms"]
        if not isinstance(points, list) or not all(isinstance(p, str) for p in points):
            raise InputError("phase.points: expected a list of labels")
        if not isinstance(sets, dict):
            raise InputError("phase.atoms: expected an object")
        for name, subset in sets.items():
            if not isinstance(subset, list) or not all(isinstance(p, str) for p in subset):
                raise InputError(f"phase.atoms.{name}: expected a list of labels")
            _check_atom_name(name, f"phase.atoms.{name}")
        try:
            return Model(phase=PhaseSpaceModel(tuple(points), sets))
        except ValueError as exc:
            raise InputError(f"phase: {exc}") from None

    dim = data.get("dimension")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise InputError("dimension: expected a positive integer")
    if not isinstance(data["atoms"], dict):
        raise InputError("atoms: expected an object mapping atom names to matrices")
    projectors = {}
    for name, value in data["atoms"].items():
        _check_atom_name(name, f"atoms.{name}")
        m = _matrix_from_json(value, f"atoms.{name}")
        if m.shape != (dim, dim):
            raise InputError(f"atoms.{name}: shape {m.shape} does not match dimension {dim}")
        try:
            projectors[name] = Projector(m, tol, name=name)
        except hb.NotAProjectorError as exc:
            raise InputError(f"atoms.{name}: {exc}") from None
    state = None
    if "state" in data:
        if not isinstance(data["state"], list):
            raise InputError("state: expected a list of [re, im] pairs")
        state = np.array([_pair(x, "state") for x in data["state"]], dtype=complex)
        _check_state(state, dim, tol, "state")
    return Model(assignment=ProjectorAssignment(dim, projectors), state=state)


def _check_atom_name(name, where):
    try:
        parse(name)
        ok = render(parse(name)) == name and name not in ("T", "F")
    except FormulaSyntaxError:
        ok = False
    if not ok:
        raise InputError(f"{where}: {name!r} is not a valid atom name")


def _check_state(state, dim, tol, where):
    if state.shape != (dim,):
        raise InputError(f"{where}: length {state.shape[0]} does not match dimension {dim}")
    try:
        hb.as_state(state, tol)
    except hb.StateNormError as exc:
        raise InputError(f"{where}: {exc}") from None


def load_model(path: str, tol: float = DEFAULT_TOL) -> Model:
    """Load a model file, or one of the builtin names.

    ``scenario`` is the five detector projectors in C^2 (no state);
    ``scenario4`` lifts them to C^2 ⊗ C^2 together with the default
    superposition state.
    """
    if path == "scenario":
        return Model(assignment=sc.detector_projectors())
    if path == "scenario4":
        return Model(assignment=sc.detector_projectors(lifted=True),
                     state=sc.build_state(sc.ExperimentConfig(tol=tol)))
    p = Path(path)
    if not p.is_file():
        raise InputError(f"model file not found: {path}")
    try:
        data = json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InputError(f"model file {path}: invalid JSON ({exc})") from None
    return model_from_dict(data, tol)


# ---------------------------------------------------------------- commands

def _parse_formula(text: str):
    try:
        return parse(text)
    except FormulaSyntaxError as exc:
        raise InputError(f"parse error: {exc}\n  {text}\n  {' ' * exc.position}^") from None


def _parse_assign(text: str | None, trivalent: bool) -> dict | None:
    if text is None:
        return None
    out = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        name, sep, value = item.partition("=")
        if not sep:
            raise InputError(f"--assign: expected NAME=VALUE, got {item!r}")
        try:
            tv = TruthValue3.parse(value)
        except ValueError:
            raise InputError(f"--assign: bad truth value {value!r} for {name}") from None
        if not trivalent and tv is TruthValue3.u:
            raise InputError(f"--assign: {name}=u needs --semantics trivalent")
        out[name.strip()] = tv if trivalent else tv is TruthValue3.t
    return out


def _copy_label(copy, dim, tol):
    if copy is GAP:
        return "no unique copy"
    if hb.close(copy, hb.identity(dim), tol):
        return "copy = P_⊤"
    if hb.close(copy, hb.zero(dim), tol):
        return "copy = P_⊥"
    return "copy = " + format_matrix(copy.matrix)


def _fmt_entry(z: complex) -> str:
    re_, im = round(z.real, 6) + 0.0, round(z.imag, 6) + 0.0
    if im == 0:
        return f"{re_:g}"
    if re_ == 0:
        return f"{im:g}i"
    return f"{re_:g}{im:+g}i"


def format_matrix(m: np.ndarray) -> str:
    """Compact one-line rendering, e.g. ``[[0.5, -0.5], [-0.5, 0.5]]``."""
    return "[" + ", ".join("[" + ", ".join(_fmt_entry(z) for z in row) + "]"
                           for row in np.asarray(m)) + "]"


def _classify_projector(p, dim, tol) -> str:
    if hb.close(p, hb.identity(dim), tol):
        return "TAUTOLOGY"
    if hb.close(p, hb.zero(dim), tol):
        return "CONTRADICTION"
    return "CONTINGENT"


def cmd_eval(args) -> tuple[dict, str]:
    tol = args.tolerance
    formula = _parse_formula(args.formula)
    sem = args.semantics
    out = {"semantics": sem, "formula": render(formula), "verdict": None}

    if sem in ("classical", "trivalent"):
        v = _parse_assign(args.assign, sem == "trivalent")
        if sem == "classical" and v is None:
            _, col = truth_table(formula)
            out["verdict"] = ("TAUTOLOGY" if col.all() else
                              "CONTRADICTION" if not col.any() else "CONTINGENT")
        elif v is None:
            raise InputError("--semantics trivalent needs --assign NAME=t|f|u,...")
        elif sem == "classical":
            out["verdict"] = "TRUE" if eval2(formula, v) else "FALSE"
        else:
            out["verdict"] = {"t": "TRUE", "f": "FALSE", "u": "U"}[eval3(formula, v).value]
        return out, out["verdict"]

    if args.model is None:
        raise InputError(f"--semantics {sem} needs --model")
    model = load_model(args.model, tol)

    if sem == "phase":
        if model.phase is None:
            raise InputError("--semantics phase needs a phase-space model")
        points = phase_eval(formula, model.phase)
        ordered = [q for q in model.phase.points if q in points]
        out["points"] = ordered
        if args.point is not None:
            if args.point not in model.phase.universe:
                raise InputError(f"--point: unknown phase-space point {args.point!r}")
            out["verdict"] = "TRUE" if args.point in points else "FALSE"
        else:
            out["verdict"] = ("TAUTOLOGY" if points == model.phase.universe else
                              "CONTRADICTION" if not points else "CONTINGENT")
        return out, f"{out['verdict']} (points = {{{', '.join(ordered)}}})"

    a = model.assignment
    if a is None:
        raise InputError(f"--semantics {sem} needs a model with projector atoms")
    state = model.state
    if args.state is not None:
        try:
            state = parse_state(args.state)
        except ValueError as exc:
            raise InputError(f"--state: {exc}") from None
        _check_state(state, a.dim, tol, "--state")

    def final(verdict: str) -> str:
        if args.merge_u and verdict in ("INDETERMINATE", "GAP"):
            return "U"
        return verdict

    if sem == "quantum":
        p = ql_copy(formula, a, tol)
        out["verdict"] = _classify_projector(p, a.dim, tol)
        out["copy"] = matrix_to_json(p.matrix)
        text = out["verdict"]
        if state is not None:
            out["state_verdict"] = final(hb.apply_and_classify(p, state, tol).value)
            text += f" (at state: {out['state_verdict']})"
        return out, text

    # tarski
    copy = tarski_copy(formula, a, tol)
    out["copy"] = "GAP" if copy is GAP else matrix_to_json(copy.matrix)
    if state is not None:
        verdict = tsentence_eval(formula, a, state, tol).value
    elif copy is GAP:
        verdict = SemanticVerdict.GAP.value
    else:
        verdict = {"TAUTOLOGY": "TRUE", "CONTRADICTION": "FALSE"}.get(
            _classify_projector(copy, a.dim, tol), "CONTINGENT")
    out["verdict"] = final(verdict)
    return out, f"{out['verdict']} ({_copy_label(copy, a.dim, tol)})"


def cmd_table(args) -> tuple[dict, str]:
    formula = _parse_formula(args.formula)
    names = formula_atoms(formula)
    if len(names) > TABLE_MAX_ATOMS:
        raise TooManyAtomsError(len(names), TABLE_MAX_ATOMS)
    rows = []
    if args.semantics == "classical":
        names, col = truth_table(formula, names)
        n = len(names)
        for i, value in enumerate(col):
            bits = [(i >> (n - 1 - k)) & 1 for k in range(n)]
            rows.append({"valuation": {nm: "t" if b else "f" for nm, b in zip(names, bits)},
                         "value": "t" if value else "f"})
    else:
        names, table = truth_table3(formula, names)
        rows = [{"valuation": {k: x.value for k, x in v.items()}, "value": val.value}
                for v, val in table]
    out = {"semantics": args.semantics, "formula": render(formula), "atoms": names, "rows": rows}
    lines = [" ".join(names) + (" | " if names else "| ") + render(formula)]
    for row in rows:
        cells = [row["valuation"][nm].rjust(len(nm)) for nm in names]
        lines.append(" ".join(cells) + (" | " if names else "| ") + row["value"])
    return out, "\n".join(lines)


def _scenario_reports(args) -> list:
    try:
        amps = {k: parse_complex(getattr(args, k)) for k in ("b1", "b2", "c1", "c2")
                if getattr(args, k) is not None}
        config = sc.ExperimentConfig(**amps, tol=args.tolerance)
    except ValueError as exc:
        raise InputError(f"experiment config: {exc}") from None
    part = args.part
    if part == "all":
        return sc.all_reports(config, lifted=args.lifted)
    if part == "paradox":
        return [sc.paradox_walkthrough()]
    if part == "copenhagen":
        return [sc.copenhagen_walkthrough(config)]
    if part == "phase":
        return [sc.phase_space_demo()]
    full = sc.resolutions_walkthrough(lifted=args.lifted, tol=args.tolerance)
    keep = (lambda s: s == "quantum") if part == "quantum" else (lambda s: s.startswith("tarski"))
    title = "Quantum-logic reading" if part == "quantum" else "Tarski-copy reading"
    return [sc.ScenarioReport(part, title, [c for c in full.checks if keep(c.semantics)],
                              list(full.notes) if part == "tarski" else [])]


def _tolerance(text: str) -> float:
    try:
        return hb.check_tol(float(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qtruth",
        description="Evaluate propositional formulas under classical, three-valued, "
                    "quantum-logic, Tarski-copy and phase-space semantics.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--tolerance", type=_tolerance, default=DEFAULT_TOL)

    p = sub.add_parser("eval", help="evaluate a formula")
    p.add_argument("--semantics", choices=SEMANTICS, required=True)
    p.add_argument("--formula", required=True)
    p.add_argument("--model", help="model JSON file, or 'scenario' / 'scenario4'")
    p.add_argument("--state", help="comma-separated complex amplitudes, e.g. '1,0' or '0.6,0.8i'")
    p.add_argument("--assign", help="valuation for classical/trivalent, e.g. 'A=t,B=u'")
    p.add_argument("--point", help="phase-space point to evaluate at")
    p.add_argument("--merge-u", action="store_true",
                   help="report INDETERMINATE and GAP both as U")
    common(p)

    p = sub.add_parser("table", help="print a full truth table")
    p.add_argument("--semantics", choices=("classical", "trivalent"), required=True)
    p.add_argument("--formula", required=True)
    common(p)

    p = sub.add_parser("scenario", help="run the built-in experiment walkthroughs")
    p.add_argument("part", choices=("paradox", "copenhagen", "quantum", "tarski", "phase", "all"))
    for k in ("b1", "b2", "c1", "c2"):
        p.add_argument(f"--{k}", help="complex amplitude, e.g. 0.6 or 0.8i")
    p.add_argument("--lifted", action="store_true",
                   help="evaluate the quantum/Tarski checks in C^2 x C^2")
    common(p)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "scenario":
            reports = _scenario_reports(args)
            ok = all(r.ok for r in reports)
            if args.format == "json":
                print(json.dumps({"ok": ok, "reports": [r.to_dict() for r in reports]}, indent=2))
            else:
                print("\n\n".join(r.render_text() for r in reports))
            return EXIT_OK if ok else EXIT_FAILED
        out, text = cmd_eval(args) if args.command == "eval" else cmd_table(args)
    except (InputError, MissingAtomError, TooManyAtomsError, IdentityUnsupportedError,
            UnknownPointError, hb.DimensionMismatchError, hb.StateNormError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.format == "json":
        print(json.dumps(out, indent=2, ensure_ascii=False))
    else:
        print(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
