"""Projectors on C^n and the lattice of closed subspaces they represent.

A closed subspace is carried by its orthogonal projector, so lattice equality
is a Frobenius-norm comparison. Meet is the eigenvalue-2 eigenspace of
``P + Q``; join and the Sasaki hook are built from meet and orthocomplement.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

__all__ = [
    "DEFAULT_TOL", "Projector", "Classification", "DistributivityReport",
    "DimensionMismatchError", "NotAProjectorError", "StateNormError", "PreconditionError",
    "check_tol", "frob", "close", "as_state", "identity", "zero",
    "projector_from_basis", "pauli_eigenprojectors", "commutes", "ortho", "meet", "join",
    "sasaki_hook", "leq", "distributivity_witness", "orthomodular_check",
    "apply_and_classify",
]

DEFAULT_TOL = 1e-9


class DimensionMismatchError(ValueError):
    pass


class NotAProjectorError(ValueError):
    pass


class StateNormError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


def check_tol(tol: float) -> float:
    if not 0 < tol < 1e-3:
        raise ValueError(f"tolerance must lie in (0, 1e-3), got {tol!r}")
    return tol


def frob(a: np.ndarray) -> float:
    return float(np.linalg.norm(a, "fro"))


def close(a, b, tol: float = DEFAULT_TOL) -> bool:
    a = a.matrix if isinstance(a, Projector) else np.asarray(a)
    b = b.matrix if isinstance(b, Projector) else np.asarray(b)
    return frob(a - b) <= tol


class Projector:
    """Hermitian idempotent complex matrix, validated on construction.

    The wrapped array is read-only. Equality is deliberately not overloaded
    because it depends on a tolerance; use :func:`close`.
    """

    __slots__ = ("matrix",)

    def __init__(self, matrix, tol: float = DEFAULT_TOL, *, name: str | None = None):
        m = np.array(matrix, dtype=complex)
        label = f" {name!r}" if name else ""
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
            raise NotAProjectorError(f"projector{label} must be a nonempty square matrix, "
                                     f"got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise NotAProjectorError(f"projector{label} has non-finite entries")
        herm = frob(m - m.conj().T)
        if herm > tol:
            raise NotAProjectorError(f"projector{label} is not Hermitian (|P - P^H| = {herm:.3g})")
        idem = frob(m @ m - m)
        if idem > tol:
            raise NotAProjectorError(f"projector{label} is not idempotent (|P^2 - P| = {idem:.3g})")
        m.setflags(write=False)
        self.matrix = m

    @classmethod
    def _trusted(cls, matrix: np.ndarray) -> "Projector":
        # Results of lattice operations: symmetrise and skip validation.
        p = object.__new__(cls)
        m = np.array((matrix + matrix.conj().T) / 2, dtype=complex)
        m.setflags(write=False)
        p.matrix = m
        return p

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def rank(self) -> int:
        return int(round(np.trace(self.matrix).real))

    def __repr__(self):
        return f"Projector(dim={self.dim}, rank={self.rank})"


def identity(n: int) -> Projector:
    return Projector._trusted(np.eye(n, dtype=complex))


def zero(n: int) -> Projector:
    return Projector._trusted(np.zeros((n, n), dtype=complex))


def _same_dim(*ps: Projector) -> int:
    dims = {p.dim for p in ps}
    if len(dims) != 1:
        raise DimensionMismatchError(f"projector dimensions differ: {sorted(dims)}")
    return dims.pop()


def projector_from_basis(vectors: Sequence, dim: int | None = None,
                         tol: float = DEFAULT_TOL) -> Projector:
    """Projector onto the span of ``vectors`` (need not be orthonormal).

    An empty list yields the zero projector, which needs ``dim``.
    """
    vecs = [np.asarray(v, dtype=complex).reshape(-1) for v in vectors]
    if not vecs:
        if dim is None:
            raise ValueError("dimension required for an empty basis")
        return zero(dim)
    dims = {v.shape[0] for v in vecs} | ({dim} if dim is not None else set())
    if len(dims) != 1:
        raise DimensionMismatchError(f"basis vectors have dimensions {sorted(dims)}")
    a = np.column_stack(vecs)
    u, s, _ = np.linalg.svd(a, full_matrices=False)
    rank = int(np.sum(s > max(tol, s[0] * a.shape[0] * np.finfo(float).eps)))
    e = u[:, :rank]
    return Projector._trusted(e @ e.conj().T)


def pauli_eigenprojectors(axis: str) -> tuple[Projector, Projector]:
    """``(plus, minus)`` eigenprojectors of sigma_x or sigma_z."""
    if axis == "z":
        return (Projector(np.diag([1, 0])), Projector(np.diag([0, 1])))
    if axis == "x":
        return (Projector(0.5 * np.array([[1, 1], [1, 1]])),
                Projector(0.5 * np.array([[1, -1], [-1, 1]])))
    raise ValueError(f"axis must be 'x' or 'z', got {axis!r}")


def commutes(p: Projector, q: Projector, tol: float = DEFAULT_TOL) -> bool:
    _same_dim(p, q)
    return frob(p.matrix @ q.matrix - q.matrix @ p.matrix) <= tol


def ortho(p: Projector) -> Projector:
    return Projector._trusted(np.eye(p.dim) - p.matrix)


def meet(p: Projector, q: Projector, tol: float = DEFAULT_TOL) -> Projector:
    """Projector onto ran(P) ∩ ran(Q).

    A unit vector lies in both ranges iff it is an eigenvector of P + Q with
    eigenvalue 2; eigenvalues within sqrt(tol) of 2 are accepted.
    """
    _same_dim(p, q)
    w, v = np.linalg.eigh(p.matrix + q.matrix)
    e = v[:, np.abs(w - 2.0) <= np.sqrt(tol)]
    return Projector._trusted(e @ e.conj().T)


def join(p: Projector, q: Projector, tol: float = DEFAULT_TOL) -> Projector:
    """Projector onto the closed span of ran(P) and ran(Q)."""
    return ortho(meet(ortho(p), ortho(q), tol))


def sasaki_hook(p: Projector, q: Projector, tol: float = DEFAULT_TOL) -> Projector:
    """Sasaki conditional ``¬P ∨ (P ∧ Q)``."""
    return join(ortho(p), meet(p, q, tol), tol)


def leq(p: Projector, q: Projector, tol: float = DEFAULT_TOL) -> bool:
    """Range inclusion ran(P) ⊆ ran(Q), tested as QP = P."""
    _same_dim(p, q)
    return frob(q.matrix @ p.matrix - p.matrix) <= tol


@dataclass(frozen=True)
class DistributivityReport:
    lhs: Projector
    rhs: Projector
    distributive: bool


def distributivity_witness(p: Projector, q: Projector, r: Projector,
                           tol: float = DEFAULT_TOL) -> DistributivityReport:
    """Compare P ∧ (Q ∨ R) with (P ∧ Q) ∨ (P ∧ R)."""
    _same_dim(p, q, r)
    lhs = meet(p, join(q, r, tol), tol)
    rhs = join(meet(p, q, tol), meet(p, r, tol), tol)
    return DistributivityReport(lhs, rhs, close(lhs, rhs, tol))


def orthomodular_check(p: Projector, q: Projector, tol: float = DEFAULT_TOL) -> bool:
    """Check Q = P ∨ (Q ∧ ¬P) for P ≤ Q."""
    if not leq(p, q, tol):
        raise PreconditionError("orthomodular law needs P <= Q")
    return close(q, join(p, meet(q, ortho(p), tol), tol), tol)


class Classification(enum.Enum):
    TRUE = "TRUE"
    FALSE = "FALSE"
    INDETERMINATE = "INDETERMINATE"


def as_state(psi, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Coerce to a 1-d complex vector and check it has unit norm."""
    v = np.asarray(psi, dtype=complex).reshape(-1)
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > tol:
        raise StateNormError(f"state must have unit norm, got {norm:.12g}")
    return v


def apply_and_classify(p: Projector, psi, tol: float = DEFAULT_TOL) -> Classification:
    """TRUE if P psi = psi, FALSE if P psi = 0, otherwise INDETERMINATE."""
    v = as_state(psi, tol)
    if v.shape[0] != p.dim:
        raise DimensionMismatchError(f"state has dimension {v.shape[0]}, projector {p.dim}")
    pv = p.matrix @ v
    if np.linalg.norm(pv - v) <= tol:
        return Classification.TRUE
    if np.linalg.norm(pv) <= tol:
        return Classification.FALSE
    return Classification.INDETERMINATE
