"""The Stern-Gerlach detector experiment and its walkthrough reports.

Five click sentences: ``D1L, D2L`` (left side) and ``D1R, D2R, D3R`` (right
side). The z+ beam feeds D1L and D1R; the z- beam feeds D2L and, after an x
analyser, D2R (x+) or D3R (x-).

Two state spaces are used. The single-spin projector list lives in C^2, where
D1L and D1R share a projector. The collapse walkthrough needs the two-factor
state ``b1 |z+>|z+> + b2 |z->(c1 |x+> + c2 |x->)`` and so lives in C^2 ⊗ C^2,
with left-side detectors acting on the first factor and right-side detectors
on the second (see :func:`lift`).
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

import numpy as np

from . import hilbert as hb
from .formula import Atom, Implies, Not, Or, equivalent2, eval2, find_valuations, is_tautology, parse
from .hilbert import DEFAULT_TOL, Classification, Projector
from .semantics import (
    GAP, PhaseSpaceModel, ProjectorAssignment, QLClass, distributivity_identity_demo,
    ql_classify, ql_copy, sentence_identity, tarski_copy,
)
from .trivalent import TruthValue3, eval3

__all__ = [
    "DETECTORS", "LEFT", "RIGHT", "FORMULAS", "ExperimentConfig", "ConfigError",
    "CollapseError", "Check", "ScenarioReport", "CommutationTable",
    "detector_projectors", "commutation_table", "build_state", "lift", "collapse",
    "copenhagen_walkthrough", "paradox_walkthrough", "resolutions_walkthrough",
    "phase_space_demo", "all_reports",
]

LEFT = ("D1L", "D2L")
RIGHT = ("D1R", "D2R", "D3R")
DETECTORS = LEFT + RIGHT

# Sentences of the experiment, as formula text.
FORMULAS = {
    "prohibition_left": "!(D1L & D2L)",
    "prohibition_right_12": "!(D1R & D2R)",
    "prohibition_right_13": "!(D1R & D3R)",
    "prohibition_right_23": "!(D2R & D3R)",
    "cond_1": "D1L -> D1R",
    "cond_2": "D2L -> (D2R | D3R)",
    # the two conditionals cannot both fail
    "not_both_fail": "!(D1L -> D1R) & !(D2L -> (D2R | D3R)) <-> F",
    # disjunction of the conditionals is a tautology
    "disjunction": "(D1L -> D1R) | (D2L -> (D2R | D3R))",
    "disjunction_eq": "(D1L -> D1R) | (D2L -> (D2R | D3R)) <-> T",
    "philo_form": "!(D1L & D2L) | (D1R | (D2R | D3R))",
    "philo_form_eq": "!(D1L & D2L) | (D1R | (D2R | D3R)) <-> T",
    "right_any": "D1R | (D2R | D3R)",
    # quantum-logic counterpart of the disjunction (-> read as Sasaki hook)
    "q_disjunction": "(D1L -> D1R) | (D2L -> (D2R | D3R))",
    "q_left_exclusive": "!(D1L & D2L)",
    "q_branch_1": "D1L & D1R",
    "q_branch_2": "D2L & (D2R | D3R)",
    "q_hook_1": "!D1L | D1L",
    "q_hook_2": "!D2L | D2L",
    # Tarski copies
    "t1": "D1R | (D2R | D3R)",
    "t2_12": "D1R & D2R",
    "t2_13": "D1R & D3R",
    "t3": "D2R & D3R",
    "id_f_rhs": "D1R | (D2R & D3R)",
    "id_u_rhs": "(D1R & D2R) & D3R",
}


class ConfigError(ValueError):
    pass


class CollapseError(ValueError):
    pass


# ---------------------------------------------------------------- reports

@dataclass
class Check:
    label: str
    formulas: list[str]
    semantics: str
    space: str
    expected: str
    computed: str

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


@dataclass
class ScenarioReport:
    name: str
    title: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, label, formulas, semantics, space, expected, computed) -> Check:
        if isinstance(formulas, str):
            formulas = [formulas]
        c = Check(label, list(formulas), semantics, space, str(expected), str(computed))
        self.checks.append(c)
        return c

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "title": self.title,
            "ok": self.ok,
            "checks": [c.to_dict() for c in self.checks],
            "notes": list(self.notes),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def render_text(self) -> str:
        lines = [f"== {self.title} =="]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"[{mark}] {c.label}")
            for text in c.formulas:
                lines.append(f"       {text}")
            lines.append(f"       semantics={c.semantics} space={c.space} "
                         f"expected={c.expected} computed={c.computed}")
        for note in self.notes:
            lines.append(f"note: {note}")
        n_fail = len(self.failures)
        lines.append(f"-- {len(self.checks) - n_fail}/{len(self.checks)} checks passed")
        return "\n".join(lines)


# ---------------------------------------------------------------- experiment model

@dataclass(frozen=True)
class ExperimentConfig:
    b1: complex = 1 / np.sqrt(2)
    b2: complex = 1 / np.sqrt(2)
    c1: complex = 1 / np.sqrt(2)
    c2: complex = 1 / np.sqrt(2)
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        hb.check_tol(self.tol)
        for pair in (("b1", "b2"), ("c1", "c2")):
            norm = sum(abs(complex(getattr(self, k))) ** 2 for k in pair)
            if abs(norm - 1) > self.tol:
                raise ConfigError(f"|{pair[0]}|^2 + |{pair[1]}|^2 = {norm:.12g}, expected 1")


def _ket(axis: str, sign: str) -> np.ndarray:
    s = 1 / np.sqrt(2)
    return {
        ("z", "+"): np.array([1, 0], dtype=complex),
        ("z", "-"): np.array([0, 1], dtype=complex),
        ("x", "+"): np.array([s, s], dtype=complex),
        ("x", "-"): np.array([s, -s], dtype=complex),
    }[axis, sign]


def lift(p: Projector, side: str) -> Projector:
    """Embed a single-spin projector into C^2 ⊗ C^2 on the given factor."""
    if p.dim != 2:
        raise hb.DimensionMismatchError(f"lift needs a 2x2 projector, got {p.dim}x{p.dim}")
    eye = np.eye(2)
    if side == "left":
        return Projector._trusted(np.kron(p.matrix, eye))
    if side == "right":
        return Projector._trusted(np.kron(eye, p.matrix))
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def detector_projectors(lifted: bool = False) -> ProjectorAssignment:
    """Click projectors of the five detectors.

    By default in C^2 (D1L and D1R are the same z+ projector); with
    ``lifted=True`` in C^2 ⊗ C^2, left detectors on the first factor and right
    detectors on the second.
    """
    zp, zm = hb.pauli_eigenprojectors("z")
    xp, xm = hb.pauli_eigenprojectors("x")
    single = {"D1L": zp, "D2L": zm, "D1R": zp, "D2R": xp, "D3R": xm}
    if not lifted:
        return ProjectorAssignment(2, single)
    return ProjectorAssignment(4, {
        name: lift(p, "left" if name in LEFT else "right") for name, p in single.items()
    })


@dataclass(frozen=True)
class CommutationTable:
    labels: tuple[str, ...]
    commute: np.ndarray       # bool, [i, j] = P_i P_j == P_j P_i
    product_zero: np.ndarray  # bool, [i, j] = P_i P_j == 0
    commutator_norm: np.ndarray


def commutation_table(a: ProjectorAssignment | None = None,
                      tol: float = DEFAULT_TOL) -> CommutationTable:
    a = detector_projectors() if a is None else a
    labels = DETECTORS
    n = len(labels)
    comm = np.zeros((n, n), dtype=bool)
    pzero = np.zeros((n, n), dtype=bool)
    cnorm = np.zeros((n, n))
    for i, x in enumerate(labels):
        for j, y in enumerate(labels):
            p, q = a[x].matrix, a[y].matrix
            cnorm[i, j] = hb.frob(p @ q - q @ p)
            comm[i, j] = hb.commutes(a[x], a[y], tol)
            pzero[i, j] = hb.frob(p @ q) <= tol
    return CommutationTable(labels, comm, pzero, cnorm)


def build_state(c: ExperimentConfig | None = None) -> np.ndarray:
    """``b1 |z+>|z+> + b2 |z->(c1 |x+> + c2 |x->)`` in the z basis of C^2 ⊗ C^2."""
    c = ExperimentConfig() if c is None else c
    branch1 = np.kron(_ket("z", "+"), _ket("z", "+"))
    branch2 = np.kron(_ket("z", "-"), c.c1 * _ket("x", "+") + c.c2 * _ket("x", "-"))
    psi = complex(c.b1) * branch1 + complex(c.b2) * branch2
    return hb.as_state(psi, c.tol)


def collapse(psi, p: Projector, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Normalised projection ``P psi / |P psi|``."""
    v = np.asarray(psi, dtype=complex).reshape(-1)
    if v.shape[0] != p.dim:
        raise hb.DimensionMismatchError(f"state has dimension {v.shape[0]}, projector {p.dim}")
    pv = p.matrix @ v
    norm = float(np.linalg.norm(pv))
    if norm <= tol:
        raise CollapseError("projection of the state onto this branch is zero")
    return pv / norm


# ---------------------------------------------------------------- walkthroughs

def paradox_walkthrough() -> ScenarioReport:
    r = ScenarioReport("paradox", "Classical (bivalent) reading: the paradox")
    F = {k: parse(v) for k, v in FORMULAS.items()}

    r.add("De Morgan step: 'both conditionals fail' is false  <=>  their disjunction is true",
          [FORMULAS["not_both_fail"], FORMULAS["disjunction_eq"]], "classical", "-",
          True, equivalent2(F["not_both_fail"], F["disjunction_eq"]))
    r.add("Philo step: disjunction of conditionals  <=>  !(D1L & D2L) | (D1R | (D2R | D3R))",
          [FORMULAS["disjunction_eq"], FORMULAS["philo_form_eq"]], "classical", "-",
          True, equivalent2(F["disjunction_eq"], F["philo_form_eq"]))
    entailment = Implies(F["prohibition_left"], F["disjunction"])
    r.add("left-side exclusivity entails the disjunction of conditionals",
          [str(entailment)], "classical", "-", True, is_tautology(entailment))

    # Under the constraints, the right-side disjunction is left unconstrained.
    sat = find_valuations([F["philo_form_eq"], F["prohibition_left"]], parse("T"))
    values = sorted({eval2(F["right_any"], v) for v in sat})
    r.add("the right-side disjunction takes no fixed truth value under the constraints",
          [FORMULAS["right_any"]], "classical", "-", "[False, True]", values)

    exhibit = find_valuations([F["disjunction_eq"], F["prohibition_left"]], parse("D2R & D3R"))
    r.add("a bivalent valuation satisfies the constraints with D2R & D3R true",
          [FORMULAS["disjunction_eq"], FORMULAS["prohibition_left"], "require: D2R & D3R"],
          "classical", "-", True, len(exhibit) > 0)
    r.add("every such valuation violates the right-side prohibition",
          [FORMULAS["prohibition_right_23"]], "classical", "-", True,
          bool(exhibit) and all(not eval2(F["prohibition_right_23"], v) for v in exhibit))
    relaxed = find_valuations([F["disjunction_eq"]], parse("D2R & D3R"))
    r.add("dropping the left-side prohibition keeps the exhibit",
          [FORMULAS["disjunction_eq"], "require: D2R & D3R"], "classical", "-",
          True, len(relaxed) >= len(exhibit) > 0)
    if exhibit:
        shown = ", ".join(f"{k}={'T' if val else 'F'}" for k, val in exhibit[0].items())
        r.notes.append(f"first exhibit valuation: {shown} ({len(exhibit)} in total)")

    # Bivalence (A1) and consistency (A2) cannot hold together.
    a1, a2 = Atom("A1"), Atom("A2")
    conclusion = Or(Not(a1), Not(a2))
    consistent = not exhibit
    r.add("conclusion: !A1 | !A2 (bivalence and consistency exclude each other)",
          [str(conclusion)], "classical", "-", "TRUE",
          "TRUE" if eval2(conclusion, {"A1": True, "A2": consistent}) else "FALSE")
    r.add("restated as A1 -> !A2", [str(conclusion), str(Implies(a1, Not(a2)))], "classical",
          "-", True, equivalent2(conclusion, Implies(a1, Not(a2))))
    r.add("restated as A2 -> !A1", [str(conclusion), str(Implies(a2, Not(a1)))], "classical",
          "-", True, equivalent2(conclusion, Implies(a2, Not(a1))))
    return r


def _verdict(p: Projector, psi, tol) -> str:
    return hb.apply_and_classify(p, psi, tol).value


def copenhagen_walkthrough(c: ExperimentConfig | None = None) -> ScenarioReport:
    c = ExperimentConfig() if c is None else c
    tol = c.tol
    r = ScenarioReport("copenhagen", "Copenhagen reading: collapse onto branches")
    a = detector_projectors(lifted=True)
    psi = build_state(c)
    space = "C2xC2"

    def reachable(state, p):
        return np.linalg.norm(p.matrix @ state) > tol

    # before any click the x-analysed sentences have no truth value
    gappy = _verdict(a["D2R"], psi, tol) == Classification.INDETERMINATE.value
    for text in ("!D2R", "D2R & S", "D2R | S", "D2R = S"):
        label = f"pre-collapse: gap in D2R makes '{text}' gappy (S = t)"
        if gappy:
            r.add(label, [text], "trivalent", space, "u",
                  eval3(parse(text), {"D2R": TruthValue3.u, "S": TruthValue3.t}))
        else:
            r.add(label, [text], "trivalent", space, "VACUOUS", "VACUOUS")

    collapsed = []
    if reachable(psi, a["D1L"]):
        s1 = collapse(psi, a["D1L"], tol)
        collapsed.append(("branch 1 (D1L clicked)", s1))
        r.add("branch 1: D1L true", ["D1L"], "projector", space, "TRUE", _verdict(a["D1L"], s1, tol))
        r.add("branch 1: D1R true, so D1L -> D1R is verified", ["D1R"], "projector", space,
              "TRUE", _verdict(a["D1R"], s1, tol))
    else:
        for label in ("branch 1: D1L true", "branch 1: D1R true, so D1L -> D1R is verified"):
            r.add(label, [], "projector", space, "VACUOUS", "VACUOUS")

    if reachable(psi, a["D2L"]):
        s2 = collapse(psi, a["D2L"], tol)
        collapsed.append(("branch 2 (D2L clicked)", s2))
        r.add("branch 2: D2L true", ["D2L"], "projector", space, "TRUE", _verdict(a["D2L"], s2, tol))
        r.add("branch 2: D2R | D3R true, so D2L -> (D2R | D3R) is verified", ["D2R | D3R"],
              "quantum", space, "TRUE", _verdict(ql_copy(parse("D2R | D3R"), a, tol), s2, tol))
        for det, other in (("D2R", "D3R"), ("D3R", "D2R")):
            label = f"branch 2, {det} sub-branch: D2L and {det} true, {other} false"
            if reachable(s2, a[det]):
                s3 = collapse(s2, a[det], tol)
                collapsed.append((f"branch 2 / {det}", s3))
                got = "/".join(_verdict(a[n], s3, tol) for n in ("D2L", det, other))
                r.add(label, ["D2L", det, other], "projector", space, "TRUE/TRUE/FALSE", got)
            else:
                r.add(label, [], "projector", space, "VACUOUS", "VACUOUS")
    else:
        r.add("branch 2: D2L true", [], "projector", space, "VACUOUS", "VACUOUS")
        r.add("branch 2: D2R | D3R true, so D2L -> (D2R | D3R) is verified", [], "quantum",
              space, "VACUOUS", "VACUOUS")
        for det, other in (("D2R", "D3R"), ("D3R", "D2R")):
            r.add(f"branch 2, {det} sub-branch: D2L and {det} true, {other} false", [],
                  "projector", space, "VACUOUS", "VACUOUS")

    pairs = [("D1L", "D2L"), ("D1R", "D2R"), ("D1R", "D3R"), ("D2R", "D3R")]
    for label, state in collapsed:
        both = [f"{x}&{y}" for x, y in pairs
                if _verdict(a[x], state, tol) == "TRUE" and _verdict(a[y], state, tol) == "TRUE"]
        r.add(f"{label}: no two same-side detectors both true", [f"!({x} & {y})" for x, y in pairs],
              "projector", space, "none", ", ".join(both) or "none")
        for m in ("D2R", "D3R"):
            text = f"D1R & {m}"
            r.add(f"{label}: {text} is false", [text], "quantum", space, "FALSE",
                  _verdict(ql_copy(parse(text), a, tol), state, tol))
        r.add(f"{label}: D2R & D3R is false", ["D2R & D3R"], "quantum", space, "FALSE",
              _verdict(ql_copy(parse("D2R & D3R"), a, tol), state, tol))

    r.notes.append("if the same sentence is read as bivalent after collapse and as gappy before "
                   "it (depending on the observer), the axiom set is inconsistent and every "
                   "sentence follows; this is narrated, not checked")
    return r


def resolutions_walkthrough(lifted: bool = False, tol: float = DEFAULT_TOL) -> ScenarioReport:
    a = detector_projectors(lifted=lifted)
    space = "C2xC2" if lifted else "C2"
    r = ScenarioReport("resolutions", "Quantum-logic and Tarski-copy readings")
    F = {k: parse(v) for k, v in FORMULAS.items()}

    r.add("quantum logic: disjunction of Sasaki conditionals is a tautology",
          [FORMULAS["q_disjunction"]], "quantum", space, "TAUTOLOGY",
          ql_classify(F["q_disjunction"], a, tol).value)
    for key in ("q_hook_1", "q_hook_2"):
        r.add("quantum logic: each hook reduces to a tautology", [FORMULAS[key]], "quantum",
              space, "TAUTOLOGY", ql_classify(F[key], a, tol).value)
    r.add("quantum logic: !(D1L & D2L) is a tautology", [FORMULAS["q_left_exclusive"]],
          "quantum", space, "TAUTOLOGY", ql_classify(F["q_left_exclusive"], a, tol).value)
    r.add("quantum logic: D1L & D1R is neither tautology nor contradiction",
          [FORMULAS["q_branch_1"]], "quantum", space, "CONTINGENT",
          ql_classify(F["q_branch_1"], a, tol).value)
    if not lifted:
        r.add("quantum logic: D1L & D1R has the same copy as D1L",
              [FORMULAS["q_branch_1"], "D1L"], "quantum", space, True,
              hb.close(ql_copy(F["q_branch_1"], a, tol), a["D1L"], tol))
    r.add("quantum logic: D2L & (D2R | D3R) is neither tautology nor contradiction",
          [FORMULAS["q_branch_2"]], "quantum", space, "CONTINGENT",
          ql_classify(F["q_branch_2"], a, tol).value)
    r.add("quantum logic: D2R | D3R is a tautology", ["D2R | D3R"], "quantum", space,
          "TAUTOLOGY", ql_classify(parse("D2R | D3R"), a, tol).value)
    for x, y in (("D1L", "D2L"), ("D1R", "D2R"), ("D1R", "D3R"), ("D2R", "D3R")):
        r.add(f"quantum logic: prohibition {x} & {y} is not a tautology", [f"{x} & {y}"],
              "quantum", space, True,
              ql_classify(parse(f"{x} & {y}"), a, tol) is not QLClass.TAUTOLOGY)

    def copy_str(formula):
        cp = tarski_copy(formula, a, tol)
        if cp is GAP:
            return "GAP"
        if hb.close(cp, hb.identity(a.dim), tol):
            return "IDENTITY"
        if hb.close(cp, hb.zero(a.dim), tol):
            return "ZERO"
        return "PROJECTOR"

    r.add("Tarski copy of D1R | (D2R | D3R) is the identity", [FORMULAS["t1"]], "tarski", space,
          "IDENTITY", copy_str(F["t1"]))
    r.add("Tarski copy of D1R & D2R does not exist", [FORMULAS["t2_12"]], "tarski", space,
          "GAP", copy_str(F["t2_12"]))
    r.add("Tarski copy of D1R & D3R does not exist", [FORMULAS["t2_13"]], "tarski", space,
          "GAP", copy_str(F["t2_13"]))
    r.add("Tarski copy of D2R & D3R is zero", [FORMULAS["t3"]], "tarski", space, "ZERO",
          copy_str(F["t3"]))

    r.add("identity with D1R | (D2R & D3R) is false",
          [f"({FORMULAS['t1']}) = ({FORMULAS['id_f_rhs']})"], "tarski+trivalent", space, "f",
          sentence_identity(F["t1"], F["id_f_rhs"], a, tol))
    for rhs in ("(D1R & D2R) & D3R", "(D1R & D3R) & D2R"):
        r.add(f"identity with {rhs} is undefined", [f"({FORMULAS['t1']}) = ({rhs})"],
              "tarski+trivalent", space, "u", sentence_identity(F["t1"], parse(rhs), a, tol))

    zp, _ = hb.pauli_eigenprojectors("z")
    xp, xm = hb.pauli_eigenprojectors("x")
    w = hb.distributivity_witness(zp, xp, xm, tol)
    r.add("lattice: z+ ∧ (x+ ∨ x-) = z+", ["A & (B | C)"], "quantum", "C2", True,
          hb.close(w.lhs, zp, tol))
    r.add("lattice: (z+ ∧ x+) ∨ (z+ ∧ x-) = 0", ["(A & B) | (A & C)"], "quantum", "C2", True,
          hb.close(w.rhs, hb.zero(2), tol))
    r.add("lattice: distributivity fails on (z+, x+, x-)", [], "quantum", "C2", False,
          w.distributive)
    demo = ProjectorAssignment(2, {"S1": zp, "S2": xp})
    r.add("Tarski: S1 | (S2 & !S2) = (S1 | S2) & (S1 | !S2) is undefined, not false",
          ["S1 | (S2 & !S2)", "(S1 | S2) & (S1 | !S2)"], "tarski+trivalent", "C2", "u",
          distributivity_identity_demo(demo, "S1", "S2", tol))

    r.notes.append("the right-side disjunction is never identical to a conjunction of right-side "
                   "clicks: its identity with them is f or u, never t")
    return r


def _demo_phase_model() -> PhaseSpaceModel:
    points = ("q1", "q2", "q3", "q4", "q5", "q6")
    return PhaseSpaceModel(points, {
        "S": {"q1", "q2"},
        "S1": {"q1", "q2", "q3"},
        "S2": {"q3", "q4"},
    })


def phase_space_demo() -> ScenarioReport:
    from .semantics import phase_eval, phase_truth

    m = _demo_phase_model()
    r = ScenarioReport("phase", "Classical phase-space reading")
    space = f"Γ={{{', '.join(m.points)}}}"
    xs, x1, x2 = m.sets["S"], m.sets["S1"], m.sets["S2"]
    universe = set(m.points)

    displays = [
        ("S true iff q ∈ X_S", "S", lambda q: q in xs),
        ("!S true iff q ∈ complement of X_S", "!S", lambda q: q in universe - xs),
        ("S1 & S2 true iff q ∈ X_S1 ∩ X_S2", "S1 & S2", lambda q: q in x1 & x2),
        ("S1 | S2 true iff q ∈ X_S1 ∪ X_S2", "S1 | S2", lambda q: q in x1 | x2),
    ]
    for label, text, member in displays:
        f = parse(text)
        agree = all(phase_truth(f, m, q) == member(q) for q in m.points)
        r.add(label, [text], "phase", space, True, agree)

    oracle_formulas = [
        "S -> S1", "S1 <-> !S2", "!(S1 & S2) | S", "(S | S1) & !(S2 -> S)", "S = S1",
        "S | !S", "S2 & !S2",
    ]
    for text in oracle_formulas:
        f = parse(text)
        agree = all(
            phase_truth(f, m, q) == eval2(f, {k: q in v for k, v in m.sets.items()})
            for q in m.points
        )
        r.add(f"pointwise agreement with bivalent evaluation: {text}", [text], "phase", space,
              True, agree)
    r.add("S | !S holds at every point", ["S | !S"], "phase", space, True,
          phase_eval(parse("S | !S"), m) == m.universe)
    return r


PARTS = {
    "paradox": paradox_walkthrough,
    "copenhagen": copenhagen_walkthrough,
    "quantum": resolutions_walkthrough,
    "tarski": resolutions_walkthrough,
    "phase": phase_space_demo,
}


def all_reports(config: ExperimentConfig | None = None, lifted: bool = False) -> list[ScenarioReport]:
    tol = config.tol if config is not None else DEFAULT_TOL
    return [
        paradox_walkthrough(),
        copenhagen_walkthrough(config),
        resolutions_walkthrough(lifted=lifted, tol=tol),
        phase_space_demo(),
    ]
