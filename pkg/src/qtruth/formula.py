"""Propositional formulas: AST, text grammar, and classical two-valued semantics.

Grammar (ASCII, whitespace-insensitive)::

    formula := iff
    iff     := imp (("<->" | "=") imp)*
    imp     := or ("->" imp)?
    or      := and ("|" and)*
    and     := unary ("&" unary)*
    unary   := "!" unary | "(" formula ")" | "T" | "F" | IDENT

``T`` and ``F`` are the constants top and bottom; every other identifier
matching ``[A-Za-z][A-Za-z0-9_]*`` is an atom.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

__all__ = [
    "Formula", "Atom", "Top", "Bottom", "Not", "And", "Or", "Implies", "Iff", "Identity",
    "FormulaSyntaxError", "MissingAtomError", "TooManyAtomsError",
    "parse", "render", "atoms", "eval2", "is_tautology", "equivalent2",
    "find_valuations", "truth_table", "MAX_ENUM_ATOMS",
]

MAX_ENUM_ATOMS = 24

_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class Formula:
    """Base class of the formula AST. Nodes are immutable and hashable."""

    __slots__ = ()

    def __str__(self) -> str:
        return render(self)

    # operator sugar for building formulas in Python code
    def __invert__(self) -> "Not":
        return Not(self)

    def __and__(self, other: "Formula") -> "And":
        return And(self, other)

    def __or__(self, other: "Formula") -> "Or":
        return Or(self, other)

    def __rshift__(self, other: "Formula") -> "Implies":
        return Implies(self, other)


@dataclass(frozen=True, repr=False)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not isinstance(self.name, str) or not _IDENT_RE.match(self.name):
            raise ValueError(f"invalid atom name {self.name!r}")
        if self.name in ("T", "F"):
            raise ValueError(f"atom name {self.name!r} is reserved for a constant")

    def __repr__(self):
        return f"Atom({self.name!r})"


@dataclass(frozen=True, repr=False)
class Top(Formula):
    def __repr__(self):
        return "Top()"


@dataclass(frozen=True, repr=False)
class Bottom(Formula):
    def __repr__(self):
        return "Bottom()"


@dataclass(frozen=True)
class Not(Formula):
    child: Formula


@dataclass(frozen=True)
class _Binary(Formula):
    left: Formula
    right: Formula


class And(_Binary):
    pass


class Or(_Binary):
    pass


class Implies(_Binary):
    pass


class Iff(_Binary):
    pass


class Identity(_Binary):
    """Meta-level sentence identity ``=``; classically the same as ``<->``."""


class FormulaSyntaxError(ValueError):
    """Malformed formula text.

    ``position`` is the 0-based character offset of the offending token and
    ``expected`` the set of token kinds that would have been accepted there.
    """

    def __init__(self, message: str, text: str, position: int, expected: Iterable[str]):
        self.text = text
        self.position = position
        self.expected = frozenset(expected)
        exp = ", ".join(sorted(self.expected))
        super().__init__(f"{message} at position {position} (expected one of: {exp})")


class MissingAtomError(LookupError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"valuation does not assign atom {name!r}")


class TooManyAtomsError(ValueError):
    def __init__(self, count: int, bound: int):
        self.count = count
        self.bound = bound
        super().__init__(f"{count} atoms exceeds the enumeration bound of {bound}")


# ---------------------------------------------------------------- tokenizer

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<op><->|->|[!&|=()])|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<bad>\S))"
)

_START_OF_UNARY = frozenset({"'!'", "'('", "'T'", "'F'", "identifier"})


@dataclass(frozen=True)
class _Token:
    kind: str  # operator text, "T", "F", "IDENT" or "EOF"
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN_RE.match(text, pos)
        if m is None:  # only trailing whitespace remains
            break
        if m.group("op"):
            tokens.append(_Token(m.group("op"), m.group("op"), m.start("op")))
        elif m.group("ident"):
            word = m.group("ident")
            kind = word if word in ("T", "F") else "IDENT"
            tokens.append(_Token(kind, word, m.start("ident")))
        else:
            raise FormulaSyntaxError(
                f"unexpected character {m.group('bad')!r}", text, m.start("bad"),
                _START_OF_UNARY | {"operator"},
            )
        pos = m.end()
    tokens.append(_Token("EOF", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def _fail(self, expected):
        tok = self.tok
        what = "end of input" if tok.kind == "EOF" else f"token {tok.text!r}"
        raise FormulaSyntaxError(f"unexpected {what}", self.text, tok.pos, expected)

    def parse(self) -> Formula:
        f = self.iff()
        if self.tok.kind != "EOF":
            self._fail({"'<->'", "'='", "'->'", "'|'", "'&'", "end of input"})
        return f

    def iff(self) -> Formula:
        left = self.imp()
        while self.tok.kind in ("<->", "="):
            node = Iff if self.tok.kind == "<->" else Identity
            self.i += 1
            left = node(left, self.imp())
        return left

    def imp(self) -> Formula:
        left = self.or_()
        if self.tok.kind == "->":
            self.i += 1
            return Implies(left, self.imp())
        return left

    def or_(self) -> Formula:
        left = self.and_()
        while self.tok.kind == "|":
            self.i += 1
            left = Or(left, self.and_())
        return left

    def and_(self) -> Formula:
        left = self.unary()
        while self.tok.kind == "&":
            self.i += 1
            left = And(left, self.unary())
        return left

    def unary(self) -> Formula:
        tok = self.tok
        if tok.kind == "!":
            self.i += 1
            return Not(self.unary())
        if tok.kind == "(":
            self.i += 1
            inner = self.iff()
            if self.tok.kind != ")":
                self._fail({"')'", "'<->'", "'='", "'->'", "'|'", "'&'"})
            self.i += 1
            return inner
        if tok.kind == "T":
            self.i += 1
            return Top()
        if tok.kind == "F":
            self.i += 1
            return Bottom()
        if tok.kind == "IDENT":
            self.i += 1
            return Atom(tok.text)
        self._fail(_START_OF_UNARY)


def parse(text: str) -> Formula:
    """Parse formula text into an AST.

    >>> parse("A | B & C")
    Or(left=Atom('A'), right=And(left=Atom('B'), right=Atom('C')))
    """
    return _Parser(text).parse()


# ---------------------------------------------------------------- rendering

_PREC = {Iff: 1, Identity: 1, Implies: 2, Or: 3, And: 4}
_SYMBOL = {Iff: "<->", Identity: "=", Implies: "->", Or: "|", And: "&"}


def _prec(f: Formula) -> int:
    if isinstance(f, Not):
        return 5
    return _PREC.get(type(f), 6)


def _render(f: Formula, min_prec: int) -> str:
    match f:
        case Atom(name):
            s = name
        case Top():
            s = "T"
        case Bottom():
            s = "F"
        case Not(child):
            s = "!" + _render(child, 5)
        case Implies(left, right):
            # right-associative
            s = f"{_render(left, 3)} -> {_render(right, 2)}"
        case _Binary(left, right):
            p = _PREC[type(f)]
            s = f"{_render(left, p)} {_SYMBOL[type(f)]} {_render(right, p + 1)}"
        case _:
            raise TypeError(f"not a formula: {f!r}")
    return f"({s})" if _prec(f) < min_prec else s


def render(f: Formula) -> str:
    """Minimal-parenthesis text for ``f``; ``parse(render(f)) == f``."""
    return _render(f, 0)


# ---------------------------------------------------------------- traversal

def _walk(f: Formula) -> Iterator[Formula]:
    stack = [f]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, Not):
            stack.append(node.child)
        elif isinstance(node, _Binary):
            stack.append(node.right)
            stack.append(node.left)


def atoms(*formulas: Formula) -> list[str]:
    """Atom names in first-occurrence (left-to-right) order, without duplicates."""
    seen = {}
    for f in formulas:
        for node in _walk(f):
            if isinstance(node, Atom):
                seen.setdefault(node.name, None)
    return list(seen)


# ---------------------------------------------------------------- two-valued semantics

def eval2(f: Formula, v: Mapping[str, bool]) -> bool:
    """Classical truth value of ``f`` under valuation ``v``."""
    match f:
        case Atom(name):
            try:
                return bool(v[name])
            except KeyError:
                raise MissingAtomError(name) from None
        case Top():
            return True
        case Bottom():
            return False
        case Not(child):
            return not eval2(child, v)
        case And(left, right):
            return eval2(left, v) & eval2(right, v)
        case Or(left, right):
            return eval2(left, v) | eval2(right, v)
        case Implies(left, right):
            return (not eval2(left, v)) | eval2(right, v)
        case Iff(left, right) | Identity(left, right):
            return eval2(left, v) == eval2(right, v)
    raise TypeError(f"not a formula: {f!r}")


def _eval_columns(f: Formula, cols: Mapping[str, np.ndarray], n_rows: int) -> np.ndarray:
    # Same tables as eval2, applied row-wise to boolean columns.
    match f:
        case Atom(name):
            return cols[name]
        case Top():
            return np.ones(n_rows, dtype=bool)
        case Bottom():
            return np.zeros(n_rows, dtype=bool)
        case Not(child):
            return ~_eval_columns(child, cols, n_rows)
        case And(left, right):
            return _eval_columns(left, cols, n_rows) & _eval_columns(right, cols, n_rows)
        case Or(left, right):
            return _eval_columns(left, cols, n_rows) | _eval_columns(right, cols, n_rows)
        case Implies(left, right):
            return ~_eval_columns(left, cols, n_rows) | _eval_columns(right, cols, n_rows)
        case Iff(left, right) | Identity(left, right):
            return _eval_columns(left, cols, n_rows) == _eval_columns(right, cols, n_rows)
    raise TypeError(f"not a formula: {f!r}")


def _check_bound(names: Sequence[str], bound: int):
    if len(names) > bound:
        raise TooManyAtomsError(len(names), bound)


def _columns(names: Sequence[str]) -> tuple[dict[str, np.ndarray], int]:
    """Boolean columns of the full truth table, rows in lexicographic order
    (first atom most significant, False before True)."""
    n = len(names)
    rows = np.arange(2 ** n, dtype=np.int64)
    cols = {name: ((rows >> (n - 1 - k)) & 1).astype(bool) for k, name in enumerate(names)}
    return cols, 2 ** n


def truth_table(f: Formula, names: Sequence[str] | None = None,
                bound: int = MAX_ENUM_ATOMS) -> tuple[list[str], np.ndarray]:
    """Return ``(atom_names, values)`` with one value per row of the truth table."""
    names = list(atoms(f) if names is None else names)
    _check_bound(names, bound)
    cols, n_rows = _columns(names)
    return names, _eval_columns(f, cols, n_rows)


def is_tautology(f: Formula) -> bool:
    return bool(truth_table(f)[1].all())


def equivalent2(f: Formula, g: Formula) -> bool:
    """True iff ``f`` and ``g`` agree on every valuation of their joint atoms."""
    names = atoms(f, g)
    _check_bound(names, MAX_ENUM_ATOMS)
    cols, n_rows = _columns(names)
    return bool(np.array_equal(_eval_columns(f, cols, n_rows), _eval_columns(g, cols, n_rows)))


def find_valuations(constraints: Sequence[Formula], require: Formula) -> list[dict[str, bool]]:
    """All valuations making every constraint and ``require`` true.

    Valuations range over the atoms of ``constraints`` followed by ``require``
    (first-occurrence order) and are returned in lexicographic row order.
    """
    names = atoms(*constraints, require)
    _check_bound(names, MAX_ENUM_ATOMS)
    cols, n_rows = _columns(names)
    mask = _eval_columns(require, cols, n_rows).copy()
    for c in constraints:
        mask &= _eval_columns(c, cols, n_rows)
    return [{name: bool(cols[name][i]) for name in names} for i in np.flatnonzero(mask)]
