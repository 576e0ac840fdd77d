import re

import pytest
from hypothesis import strategies as st

from qtruth.formula import And, Atom, Bottom, Iff, Identity, Implies, Not, Or, Top

ATOM_NAMES = ("A", "B", "C")


def formulas(names=ATOM_NAMES, max_depth=4, identity=True):
    """Hypothesis strategy for formulas of depth <= max_depth over ``names``."""
    leaves = st.sampled_from([Atom(n) for n in names]) | st.sampled_from([Top(), Bottom()])
    binaries = [And, Or, Implies, Iff] + ([Identity] if identity else [])

    def extend(children):
        return st.one_of(
            children.map(Not),
            st.tuples(st.sampled_from(binaries), children, children).map(
                lambda t: t[0](t[1], t[2])),
        )

    return st.recursive(leaves, extend, max_leaves=2 ** max_depth).filter(
        lambda f: depth(f) <= max_depth)


def depth(f):
    if isinstance(f, (Atom, Top, Bottom)):
        return 0
    if isinstance(f, Not):
        return 1 + depth(f.child)
    return 1 + max(depth(f.left), depth(f.right))


# ------------------------------------------------------------------ acceptance summary

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")
_results = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    failed = report.failed or (report.when == "call" and report.skipped)
    if failed:
        _results[key] = "FAIL"
    elif report.when == "call":
        _results.setdefault(key, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for (num, name), status in sorted(_results.items()):
        terminalreporter.write_line(f"criterion {num:2d} [{status}] {name.replace('_', ' ')}")


@pytest.fixture
def rng():
    import numpy as np
    return np.random.default_rng(20240611)
