# %% [markdown]
# The two-particle detector experiment as executable reports
#
# Each walkthrough returns a report of labelled checks (expected vs computed).
# The same reports are available from the command line:
#
#     qtruth scenario all
#     qtruth scenario copenhagen --b1 1 --b2 0 --format json

# %%
import numpy as np
from qtruth import scenario as sc
from qtruth.semantics import PhaseSpaceModel, phase_eval
from qtruth.formula import parse

print(sc.build_state().round(4))

# %%
for report in sc.all_reports():
    print(report.render_text())
    print()

# %%
# With b = (1, 0) the second branch is never reached; its checks are vacuous.
r = sc.copenhagen_walkthrough(sc.ExperimentConfig(1, 0))
print([c.computed for c in r.checks if c.label.startswith("branch 2")])

# %%
# Collapse by hand: a left z+ click leaves |z+>|z+>.
a = sc.detector_projectors(lifted=True)
print(sc.collapse(sc.build_state(), a["D1L"]).round(12))

# %%
# Classical phase space: sentences denote subsets of points.
m = PhaseSpaceModel(("q1", "q2", "q3"), {"S1": {"q1", "q2"}, "S2": {"q2", "q3"}})
for text in ["S1 & S2", "!S1", "S1 | S2", "S1 -> S2"]:
    print(f"{text:10s}", sorted(phase_eval(parse(text), m)))
