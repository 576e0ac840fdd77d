# %% [markdown]
# Quantum-logic copies versus Tarski copies of the detector sentences

# %%
import numpy as np
from qtruth import hilbert as hb
from qtruth.formula import parse
from qtruth.scenario import detector_projectors, commutation_table
from qtruth.semantics import (GAP, ql_copy, ql_classify, tarski_copy, tsentence_eval,
                              sentence_identity, distributivity_identity_demo,
                              ProjectorAssignment)

a = detector_projectors()
tab = commutation_table(a)
print(tab.labels)
print(tab.commute.astype(int))
print(np.round(tab.commutator_norm, 4))

# %%
# In quantum logic every sentence has a copy, and the disjunction of the two
# conditionals (read as Sasaki hooks) is the identity.
for text in ["(D1L -> D1R) | (D2L -> (D2R | D3R))", "!(D1L & D2L)", "D1L & D1R", "D2R & D3R"]:
    print(f"{text:40s}", ql_classify(parse(text), a).value)

# %%
# Tarski copies exist only when the sub-copies commute.
def show(text):
    c = tarski_copy(parse(text), a)
    if c is GAP:
        return "GAP"
    return np.round(c.matrix.real, 12).tolist()

for text in ["D1R | (D2R | D3R)", "D2R & D3R", "D1R & D2R", "D1R & D3R"]:
    print(f"{text:20s}", show(text))

# %%
# Truth at a state, and identity between sentences.
psi = np.array([1, 0])
for text in ["D1R | (D2R | D3R)", "D2R & D3R", "D1R & D2R", "D2R"]:
    print(f"{text:20s}", tsentence_eval(parse(text), a, psi).value)

lhs = parse("D1R | (D2R | D3R)")
print(sentence_identity(lhs, parse("D1R | (D2R & D3R)"), a))   # f
print(sentence_identity(lhs, parse("(D1R & D2R) & D3R"), a))   # u

# %%
# With non-commuting S1, S2 the distributive rewrite has no copy, so the
# identity S1 | (S2 & !S2) = (S1 | S2) & (S1 | !S2) is undefined, not false.
zp, _ = hb.pauli_eigenprojectors("z")
xp, _ = hb.pauli_eigenprojectors("x")
print(distributivity_identity_demo(ProjectorAssignment(2, {"S1": zp, "S2": xp}), "S1", "S2"))
