import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import formulas
from oracles import eval_python, valuations
from qtruth.formula import (
    And, Atom, Bottom, FormulaSyntaxError, Iff, Identity, Implies, MissingAtomError, Not, Or,
    Top, TooManyAtomsError, atoms, equivalent2, eval2, find_valuations, is_tautology, parse,
    render, truth_table,
)
from qtruth.scenario import FORMULAS

A, B, C = Atom("A"), Atom("B"), Atom("C")


# ---------------------------------------------------------------- parsing

def test_parse_conditional():
    assert parse("D1L -> D1R") == Implies(Atom("D1L"), Atom("D1R"))


def test_parse_negated_conjunction():
    assert parse("!(D1L & D2L)") == Not(And(Atom("D1L"), Atom("D2L")))


def test_parse_precedence():
    assert parse("A | B & C") == Or(A, And(B, C))
    assert parse("!A & B") == And(Not(A), B)
    assert parse("A -> B | C") == Implies(A, Or(B, C))
    assert parse("A <-> B -> C") == Iff(A, Implies(B, C))
    assert parse("A = B & C") == Identity(A, And(B, C))


def test_parse_associativity():
    assert parse("A -> B -> C") == Implies(A, Implies(B, C))
    assert parse("A & B & C") == And(And(A, B), C)
    assert parse("A | B | C") == Or(Or(A, B), C)
    assert parse("A <-> B = C") == Identity(Iff(A, B), C)


def test_parse_constants_and_whitespace():
    assert parse("  T|F ") == Or(Top(), Bottom())
    assert parse("!!A") == Not(Not(A))
    assert parse("TT") == Atom("TT")


@pytest.mark.parametrize("text, position", [
    ("", 0),
    ("A &", 3),
    ("(A | B", 6),
    ("A B", 2),
    ("A & & B", 4),
    ("A $ B", 2),
    (")", 0),
])
def test_parse_errors_report_position(text, position):
    with pytest.raises(FormulaSyntaxError) as info:
        parse(text)
    assert info.value.position == position
    assert info.value.expected
    assert f"position {position}" in str(info.value)


def test_atom_name_validation():
    with pytest.raises(ValueError):
        Atom("1x")
    with pytest.raises(ValueError):
        Atom("T")


# ---------------------------------------------------------------- rendering

def test_render_examples():
    assert render(Implies(A, B)) == "A -> B"
    assert render(Not(A)) == "!A"
    assert render(And(Or(A, B), C)) == "(A | B) & C"
    assert render(Implies(Implies(A, B), C)) == "(A -> B) -> C"
    assert render(Implies(A, Implies(B, C))) == "A -> B -> C"
    assert render(And(A, And(B, C))) == "A & (B & C)"
    assert render(Not(Or(A, B))) == "!(A | B)"


@given(formulas())
@settings(max_examples=300, deadline=None)
def test_render_parse_roundtrip(f):
    assert parse(render(f)) == f


@pytest.mark.parametrize("text", sorted(FORMULAS.values()))
def test_scenario_formulas_roundtrip(text):
    assert parse(render(parse(text))) == parse(text)


# ---------------------------------------------------------------- atoms

def test_atoms_first_occurrence_order():
    assert atoms(And(A, Or(B, A))) == ["A", "B"]
    assert atoms(Top()) == []
    assert atoms(parse(FORMULAS["disjunction_eq"])) == ["D1L", "D1R", "D2L", "D2R", "D3R"]
    assert atoms(A, And(C, B)) == ["A", "C", "B"]


# ---------------------------------------------------------------- eval2

def test_eval2_examples():
    assert eval2(Implies(A, B), {"A": False, "B": False}) is True
    assert eval2(Not(And(A, B)), {"A": True, "B": True}) is False
    f = parse(FORMULAS["disjunction"])
    v = {"D1L": True, "D1R": True, "D2L": False, "D2R": False, "D3R": False}
    assert eval2(f, v) is True


def test_eval2_missing_atom():
    with pytest.raises(MissingAtomError) as info:
        eval2(And(A, B), {"A": True})
    assert info.value.name == "B"


@given(formulas())
@settings(max_examples=300, deadline=None)
def test_eval2_matches_oracle(f):
    for v in valuations(["A", "B", "C"]):
        assert eval2(f, v) == eval_python(f, v)


# ---------------------------------------------------------------- enumeration

@given(formulas())
@settings(max_examples=200, deadline=None)
def test_truth_table_rows_are_lexicographic(f):
    names, col = truth_table(f, ["A", "B", "C"])
    expected = [eval_python(f, v) for v in valuations(names)]
    assert col.dtype == bool
    assert col.tolist() == expected


def test_truth_table_bound():
    many = parse(" & ".join(f"X{i}" for i in range(25)))
    with pytest.raises(TooManyAtomsError):
        truth_table(many)
    with pytest.raises(TooManyAtomsError):
        truth_table(parse("A & B & C"), bound=2)


def test_tautology_examples():
    assert is_tautology(Or(A, Not(A)))
    assert is_tautology(Iff(Implies(A, B), Or(Not(A), B)))
    assert not is_tautology(And(A, Not(A)))
    assert is_tautology(Top())
    assert not is_tautology(Bottom())


def test_equivalent2_examples():
    F = {k: parse(v) for k, v in FORMULAS.items()}
    assert equivalent2(F["not_both_fail"], F["disjunction_eq"])
    assert equivalent2(F["disjunction_eq"], F["philo_form_eq"])
    assert not equivalent2(A, Not(A))
    # different atom sets: compared over the union
    assert equivalent2(A, And(A, Or(B, Not(B))))


@given(formulas(), formulas())
@settings(max_examples=150, deadline=None)
def test_equivalent2_matches_oracle(f, g):
    expected = all(eval_python(f, v) == eval_python(g, v) for v in valuations(["A", "B", "C"]))
    assert equivalent2(f, g) == expected


def test_find_valuations_paradox_exhibit():
    F = {k: parse(v) for k, v in FORMULAS.items()}
    found = find_valuations([F["disjunction_eq"], F["prohibition_left"]], parse("D2R & D3R"))
    assert found
    for v in found:
        assert v["D2R"] and v["D3R"]
        assert eval2(F["disjunction_eq"], v) and eval2(F["prohibition_left"], v)


def test_find_valuations_trivial_cases():
    assert find_valuations([A], Not(A)) == []
    everything = find_valuations([parse("A | !A"), parse("B | !B")], Top())
    assert everything == list(valuations(["A", "B"]))


def test_find_valuations_matches_brute_force():
    cons = [parse("A -> B"), parse("B | C")]
    req = parse("!A | C")
    names = ["A", "B", "C"]
    brute = [dict(zip(names, bits)) for bits in itertools.product([False, True], repeat=3)
             if all(eval_python(c, dict(zip(names, bits))) for c in cons + [req])]
    assert find_valuations(cons, req) == brute


def test_truth_table_columns_not_aliased():
    # an Atom's column must not be modified by later mask arithmetic
    found = find_valuations([], A)
    assert found == [{"A": True}]
    names, col = truth_table(A)
    assert np.array_equal(col, [False, True])


def test_operator_sugar():
    assert (~A & B | C) == Or(And(Not(A), B), C)
    assert (A >> B) == Implies(A, B)
