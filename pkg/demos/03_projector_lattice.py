# %% [markdown]
# Projectors on C^2 and the non-distributive lattice of subspaces

# %%
import numpy as np
from qtruth import hilbert as hb

zp, zm = hb.pauli_eigenprojectors("z")
xp, xm = hb.pauli_eigenprojectors("x")
print(zp.matrix.real, xp.matrix.real, sep="\n")

# %%
# Two distinct rays in the plane meet only in 0 and span the whole plane.
print(np.round(hb.meet(zp, xp).matrix.real, 12))
print(np.round(hb.join(zp, xp).matrix.real, 12))
print("commute?", hb.commutes(zp, xp), hb.commutes(xp, xm))

# %%
# Distributivity fails: z+ ∧ (x+ ∨ x-) = z+, but (z+ ∧ x+) ∨ (z+ ∧ x-) = 0.
w = hb.distributivity_witness(zp, xp, xm)
print(np.round(w.lhs.matrix.real, 12))
print(np.round(w.rhs.matrix.real, 12))
print("distributive:", w.distributive)

# %%
# The Sasaki hook P -> Q = ¬P ∨ (P ∧ Q). For these two rays it is just ¬z+.
print(hb.close(hb.sasaki_hook(zp, xp), zm))

# %%
# Orthomodularity survives: for P ≤ Q, Q = P ∨ (Q ∧ ¬P).
rng = np.random.default_rng(0)
u, _ = np.linalg.qr(rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4)))
p = hb.projector_from_basis(u[:, :1].T)
q = hb.projector_from_basis(u[:, :3].T)
print(hb.leq(p, q), hb.orthomodular_check(p, q))

# %%
# A state either lies in the subspace, is orthogonal to it, or neither.
plus = np.array([1, 1]) / np.sqrt(2)
for name, proj in [("x+", xp), ("x-", xm), ("z+", zp)]:
    print(name, hb.apply_and_classify(proj, plus).value)
