# %% [markdown]
# Formulas, parsing and classical truth tables
#
# Formula text uses ASCII connectives: ! & | -> <-> = and the constants T, F.

# %%
from qtruth.formula import parse, render, atoms, truth_table, is_tautology, equivalent2, find_valuations

f = parse("(D1L -> D1R) | (D2L -> (D2R | D3R))")
print(repr(f))
print(render(f))
print(atoms(f))

# %%
# Precedence: ! binds tightest, then &, |, ->, and finally <-> / =.
for text in ["A | B & C", "A -> B -> C", "!A & B <-> C"]:
    print(f"{text:15s} ->  {parse(text)!r}")

# %%
# A truth table is one boolean column, rows in lexicographic order
# (first atom most significant, False before True).
names, col = truth_table(parse("A -> B"))
print(names, col.astype(int))

# %%
# The chain of rewrites on the detector sentences: "both conditionals fail"
# is false exactly when their disjunction is true, and the material
# conditional turns that disjunction into a statement about clicks.
both_fail = parse("!(D1L -> D1R) & !(D2L -> (D2R | D3R)) <-> F")
disj = parse("(D1L -> D1R) | (D2L -> (D2R | D3R)) <-> T")
clicks = parse("!(D1L & D2L) | (D1R | (D2R | D3R)) <-> T")
print(equivalent2(both_fail, disj), equivalent2(disj, clicks))
print(is_tautology(parse("(A -> B) <-> (!A | B)")))

# %%
# Nothing in these constraints stops two right-hand detectors from both
# clicking: a bivalent valuation exists with D2R & D3R true.
found = find_valuations([disj, parse("!(D1L & D2L)")], parse("D2R & D3R"))
print(len(found), "valuations, e.g.", found[0])
