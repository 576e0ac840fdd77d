# %% [markdown]
# Three-valued evaluation: a gap (u) in any operand swallows the compound.

# %%
from qtruth.formula import parse
from qtruth.trivalent import TruthValue3, eval3, truth_table3, identity_value

t, f, u = TruthValue3.t, TruthValue3.f, TruthValue3.u

for text in ["!D", "D & S", "D | S", "D -> S", "D = S"]:
    print(f"{text:8s}", eval3(parse(text), {"D": u, "S": t}))

# %%
# Even a true disjunct does not rescue D | S when D is gappy.
names, rows = truth_table3(parse("A | B"))
for v, val in rows:
    print(" ".join(str(v[n]) for n in names), "|", val)

# %%
# Excluded middle is no longer a tautology: A | !A is u at A = u.
print([str(eval3(parse("A | !A"), {"A": x})) for x in (f, t, u)])
print(identity_value(t, f), identity_value(t, u))
