"""Gapless three-valued semantics with an absorbing gap value.

The third value ``u`` is infectious (weak Kleene / Bochvar internal): any
compound with a gappy operand is gappy, whatever the other operand is. In
particular ``t | u`` is ``u``, which is where this differs from strong Kleene.
"""

from __future__ import annotations

import enum
import itertools
from typing import Mapping

import numpy as np

from .formula import (
    And, Atom, Bottom, Formula, Identity, Iff, Implies, MissingAtomError, Not, Or, Top,
    TooManyAtomsError, atoms,
)

__all__ = [
    "TruthValue3", "eval3", "equivalent3", "identity_value", "truth_table3",
    "MAX_ENUM_ATOMS3",
]

MAX_ENUM_ATOMS3 = 15


class TruthValue3(enum.Enum):
    f = "f"
    t = "t"
    u = "u"

    @classmethod
    def from_bool(cls, b: bool) -> "TruthValue3":
        return cls.t if b else cls.f

    @classmethod
    def parse(cls, text: str) -> "TruthValue3":
        key = text.strip().lower()
        aliases = {"1": "t", "true": "t", "0": "f", "false": "f", "gap": "u"}
        return cls(aliases.get(key, key))

    def __str__(self):
        return self.value


t, f, u = TruthValue3.t, TruthValue3.f, TruthValue3.u


def identity_value(x: TruthValue3, y: TruthValue3) -> TruthValue3:
    """Sentence identity: ``u`` if either side is gappy, else ``t`` iff equal."""
    if x is u or y is u:
        return u
    return t if x is y else f


def _binary(op, x: TruthValue3, y: TruthValue3) -> TruthValue3:
    if x is u or y is u:
        return u
    return TruthValue3.from_bool(op(x is t, y is t))


def eval3(formula: Formula, v: Mapping[str, TruthValue3]) -> TruthValue3:
    match formula:
        case Atom(name):
            try:
                return v[name]
            except KeyError:
                raise MissingAtomError(name) from None
        case Top():
            return t
        case Bottom():
            return f
        case Not(child):
            x = eval3(child, v)
            return x if x is u else TruthValue3.from_bool(x is f)
        case And(left, right):
            return _binary(lambda a, b: a and b, eval3(left, v), eval3(right, v))
        case Or(left, right):
            return _binary(lambda a, b: a or b, eval3(left, v), eval3(right, v))
        case Implies(left, right):
            return _binary(lambda a, b: (not a) or b, eval3(left, v), eval3(right, v))
        case Iff(left, right):
            return _binary(lambda a, b: a == b, eval3(left, v), eval3(right, v))
        case Identity(left, right):
            return identity_value(eval3(left, v), eval3(right, v))
    raise TypeError(f"not a formula: {formula!r}")


# Vectorised form used for exhaustive enumeration. Codes: f=0, t=1, u=2.


def _gap_merge(a: np.ndarray, b: np.ndarray, classical: np.ndarray) -> np.ndarray:
    return np.where((a == 2) | (b == 2), 2, classical.astype(np.int8)).astype(np.int8)


def _eval_codes(formula: Formula, cols, n_rows: int) -> np.ndarray:
    match formula:
        case Atom(name):
            return cols[name]
        case Top():
            return np.ones(n_rows, dtype=np.int8)
        case Bottom():
            return np.zeros(n_rows, dtype=np.int8)
        case Not(child):
            x = _eval_codes(child, cols, n_rows)
            return np.where(x == 2, 2, 1 - x).astype(np.int8)
    a = _eval_codes(formula.left, cols, n_rows)
    b = _eval_codes(formula.right, cols, n_rows)
    at, bt = a == 1, b == 1
    match formula:
        case And():
            return _gap_merge(a, b, at & bt)
        case Or():
            return _gap_merge(a, b, at | bt)
        case Implies():
            return _gap_merge(a, b, ~at | bt)
        case Iff() | Identity():
            return _gap_merge(a, b, at == bt)
    raise TypeError(f"not a formula: {formula!r}")


def _columns3(names):
    n = len(names)
    rows = np.arange(3 ** n, dtype=np.int64)
    return {name: ((rows // 3 ** (n - 1 - k)) % 3).astype(np.int8)
            for k, name in enumerate(names)}, 3 ** n


def truth_table3(formula: Formula, names=None, bound: int = MAX_ENUM_ATOMS3):
    """Return ``(atom_names, rows)``; each row is ``(valuation, value)``.

    Rows run lexicographically over ``f < t < u`` with the first atom most
    significant.
    """
    names = list(atoms(formula) if names is None else names)
    if len(names) > bound:
        raise TooManyAtomsError(len(names), bound)
    rows = []
    for combo in itertools.product((f, t, u), repeat=len(names)):
        v = dict(zip(names, combo))
        rows.append((v, eval3(formula, v)))
    return names, rows


def equivalent3(a: Formula, b: Formula) -> bool:
    """True iff ``a`` and ``b`` agree under all 3^n valuations."""
    names = atoms(a, b)
    if len(names) > MAX_ENUM_ATOMS3:
        raise TooManyAtomsError(len(names), MAX_ENUM_ATOMS3)
    cols, n_rows = _columns3(names)
    return bool(np.array_equal(_eval_codes(a, cols, n_rows), _eval_codes(b, cols, n_rows)))
