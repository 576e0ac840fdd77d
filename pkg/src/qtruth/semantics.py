"""Model-theoretic evaluators over projector and phase-space models.

Three readings of the same formula:

* ``ql_copy`` - quantum logic: connectives are lattice operations on the
  subspace lattice, implication is the Sasaki hook. Always defined.
* ``tarski_copy`` - each sentence gets a projector copy only when it is
  unique: conjunction/disjunction of commuting copies use ``PQ`` and
  ``P + Q - PQ``; non-commuting copies yield :data:`GAP`.
* ``phase_eval`` - classical phase space: sentences denote subsets of a
  finite point set and connectives are set operations.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from . import hilbert as hb
from .formula import (
    And, Atom, Bottom, Formula, Identity, Iff, Implies, MissingAtomError, Not, Or, Top,
)
from .hilbert import DEFAULT_TOL, Projector
from .trivalent import TruthValue3

__all__ = [
    "ProjectorAssignment", "Gap", "GAP", "SemanticVerdict", "QLClass", "PhaseSpaceModel",
    "IdentityUnsupportedError", "UnknownPointError", "CommutingInputsWarning",
    "ql_copy", "ql_classify", "tarski_copy", "tsentence_eval", "sentence_identity",
    "distributivity_identity_demo", "phase_eval", "phase_truth", "diagonal_valuation",
    "is_diagonal",
]


class IdentityUnsupportedError(ValueError):
    """Raised when ``=`` appears inside a formula given a projector copy."""


class UnknownPointError(LookupError):
    pass


class CommutingInputsWarning(UserWarning):
    pass


@dataclass(frozen=True)
class ProjectorAssignment:
    """Atom name -> projector, all of the same dimension."""

    dim: int
    projectors: Mapping[str, Projector]

    def __post_init__(self):
        for name, p in self.projectors.items():
            if not isinstance(p, Projector):
                raise TypeError(f"atom {name!r} is not assigned a Projector")
            if p.dim != self.dim:
                raise hb.DimensionMismatchError(
                    f"atom {name!r} has dimension {p.dim}, expected {self.dim}")

    @classmethod
    def of(cls, projectors: Mapping[str, Projector]) -> "ProjectorAssignment":
        dims = {p.dim for p in projectors.values()}
        if len(dims) != 1:
            raise hb.DimensionMismatchError(f"mixed projector dimensions {sorted(dims)}")
        return cls(dims.pop(), dict(projectors))

    def __getitem__(self, name: str) -> Projector:
        try:
            return self.projectors[name]
        except KeyError:
            raise MissingAtomError(name) from None

    def __contains__(self, name) -> bool:
        return name in self.projectors


class Gap:
    """Marker for a sentence with no unique projector copy."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "GAP"

    def __reduce__(self):
        return (Gap, ())


GAP = Gap()


class SemanticVerdict(enum.Enum):
    TRUE = "TRUE"
    FALSE = "FALSE"
    INDETERMINATE = "INDETERMINATE"  # unique copy, state is not an eigenvector
    GAP = "GAP"                      # no unique copy

    def merged(self) -> str:
        """Verdict string with both sources of ``u`` collapsed."""
        return "U" if self in (SemanticVerdict.INDETERMINATE, SemanticVerdict.GAP) else self.value


class QLClass(enum.Enum):
    TAUTOLOGY = "TAUTOLOGY"
    CONTRADICTION = "CONTRADICTION"
    CONTINGENT = "CONTINGENT"


def _no_identity(formula):
    raise IdentityUnsupportedError(
        f"identity '=' is a comparison between sentences, not a connective: {formula}")


# ---------------------------------------------------------------- quantum logic

def ql_copy(formula: Formula, a: ProjectorAssignment, tol: float = DEFAULT_TOL) -> Projector:
    match formula:
        case Atom(name):
            return a[name]
        case Top():
            return hb.identity(a.dim)
        case Bottom():
            return hb.zero(a.dim)
        case Not(child):
            return hb.ortho(ql_copy(child, a, tol))
        case Identity():
            _no_identity(formula)
    left = ql_copy(formula.left, a, tol)
    right = ql_copy(formula.right, a, tol)
    match formula:
        case And():
            return hb.meet(left, right, tol)
        case Or():
            return hb.join(left, right, tol)
        case Implies():
            return hb.sasaki_hook(left, right, tol)
        case Iff():
            return hb.meet(hb.sasaki_hook(left, right, tol), hb.sasaki_hook(right, left, tol), tol)
    raise TypeError(f"not a formula: {formula!r}")


def ql_classify(formula: Formula, a: ProjectorAssignment, tol: float = DEFAULT_TOL) -> QLClass:
    p = ql_copy(formula, a, tol)
    if hb.close(p, hb.identity(a.dim), tol):
        return QLClass.TAUTOLOGY
    if hb.close(p, hb.zero(a.dim), tol):
        return QLClass.CONTRADICTION
    return QLClass.CONTINGENT


# ---------------------------------------------------------------- Tarski copies

def tarski_copy(formula: Formula, a: ProjectorAssignment,
                tol: float = DEFAULT_TOL) -> Projector | Gap:
    """Unique projector copy of ``formula``, or :data:`GAP`.

    Commutation is tested on the sub-copies, not on the atoms, so e.g.
    ``X | (Y | !Y)`` has a copy for any ``X`` because the inner copy is the
    identity.
    """
    match formula:
        case Atom(name):
            return a[name]
        case Top():
            return hb.identity(a.dim)
        case Bottom():
            return hb.zero(a.dim)
        case Not(child):
            c = tarski_copy(child, a, tol)
            return GAP if c is GAP else hb.ortho(c)
        case Implies(left, right):
            return tarski_copy(Or(Not(left), right), a, tol)
        case Iff(left, right):
            return tarski_copy(And(Implies(left, right), Implies(right, left)), a, tol)
        case Identity():
            _no_identity(formula)
        case And(left, right) | Or(left, right):
            p = tarski_copy(left, a, tol)
            q = tarski_copy(right, a, tol)
            if p is GAP or q is GAP or not hb.commutes(p, q, tol):
                return GAP
            pq = p.matrix @ q.matrix
            if isinstance(formula, And):
                return Projector._trusted(pq)
            return Projector._trusted(p.matrix + q.matrix - pq)
    raise TypeError(f"not a formula: {formula!r}")


def tsentence_eval(formula: Formula, a: ProjectorAssignment, psi,
                   tol: float = DEFAULT_TOL) -> SemanticVerdict:
    """Truth of ``formula`` at state ``psi`` via its copy ``P psi = psi``."""
    psi = hb.as_state(psi, tol)
    copy = tarski_copy(formula, a, tol)
    if copy is GAP:
        return SemanticVerdict.GAP
    return SemanticVerdict(hb.apply_and_classify(copy, psi, tol).value)


def sentence_identity(f: Formula, g: Formula, a: ProjectorAssignment,
                      tol: float = DEFAULT_TOL) -> TruthValue3:
    """Three-valued ``f = g``: ``u`` if either lacks a unique copy."""
    cf = tarski_copy(f, a, tol)
    cg = tarski_copy(g, a, tol)
    if cf is GAP or cg is GAP:
        return TruthValue3.u
    return TruthValue3.t if hb.close(cf, cg, tol) else TruthValue3.f


def distributivity_identity_demo(a: ProjectorAssignment, s1: str, s2: str,
                                 tol: float = DEFAULT_TOL) -> TruthValue3:
    """Identity of ``S1 | (S2 & !S2)`` with ``(S1 | S2) & (S1 | !S2)``.

    Classically both sides equal ``S1``. For non-commuting ``S1, S2`` the
    right side has no unique copy, so the identity is ``u`` rather than ``f``:
    the failure of the copy does not amount to a failure of distributivity.
    """
    x, y = Atom(s1), Atom(s2)
    if hb.commutes(a[s1], a[s2], tol):
        warnings.warn(f"{s1} and {s2} commute; the identity is determinate",
                      CommutingInputsWarning, stacklevel=2)
    lhs = Or(x, And(y, Not(y)))
    rhs = And(Or(x, y), Or(x, Not(y)))
    return sentence_identity(lhs, rhs, a, tol)


# ---------------------------------------------------------------- phase space

@dataclass(frozen=True)
class PhaseSpaceModel:
    """Finite phase space: points plus the subset of points where each atom holds."""

    points: tuple
    sets: Mapping[str, frozenset] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        if len(set(self.points)) != len(self.points):
            raise ValueError("phase-space points must be distinct")
        universe = set(self.points)
        fixed = {}
        for name, subset in self.sets.items():
            subset = frozenset(subset)
            extra = subset - universe
            if extra:
                raise ValueError(f"atom {name!r} refers to unknown points {sorted(map(str, extra))}")
            fixed[name] = subset
        object.__setattr__(self, "sets", fixed)

    @property
    def universe(self) -> frozenset:
        return frozenset(self.points)


def phase_eval(formula: Formula, m: PhaseSpaceModel) -> frozenset:
    """Subset of points at which ``formula`` holds."""
    everything = m.universe
    match formula:
        case Atom(name):
            try:
                return m.sets[name]
            except KeyError:
                raise MissingAtomError(name) from None
        case Top():
            return everything
        case Bottom():
            return frozenset()
        case Not(child):
            return everything - phase_eval(child, m)
        case And(left, right):
            return phase_eval(left, m) & phase_eval(right, m)
        case Or(left, right):
            return phase_eval(left, m) | phase_eval(right, m)
        case Implies(left, right):
            return (everything - phase_eval(left, m)) | phase_eval(right, m)
        case Iff(left, right) | Identity(left, right):
            return everything - (phase_eval(left, m) ^ phase_eval(right, m))
    raise TypeError(f"not a formula: {formula!r}")


def phase_truth(formula: Formula, m: PhaseSpaceModel, q) -> bool:
    if q not in m.universe:
        raise UnknownPointError(f"unknown phase-space point {q!r}")
    return q in phase_eval(formula, m)


def diagonal_valuation(a: ProjectorAssignment, k: int, tol: float = DEFAULT_TOL) -> dict[str, bool]:
    """Classical valuation read off basis vector ``e_k`` of a diagonal assignment."""
    return {name: bool(abs(p.matrix[k, k] - 1) <= tol) for name, p in a.projectors.items()}


def is_diagonal(p: Projector, tol: float = DEFAULT_TOL) -> bool:
    return hb.frob(p.matrix - np.diag(np.diag(p.matrix))) <= tol
