"""Classical, three-valued, quantum-logic and Tarski-copy semantics for propositional formulas.

The submodules are:

* :mod:`qtruth.formula` - AST, parser, renderer and classical enumeration
* :mod:`qtruth.trivalent` - weak-Kleene three-valued evaluation
* :mod:`qtruth.hilbert` - projectors and the subspace lattice
* :mod:`qtruth.semantics` - quantum-logic, Tarski-copy and phase-space evaluators
* :mod:`qtruth.scenario` - the two-particle detector experiment as executable checks
* :mod:`qtruth.cli` - the ``qtruth`` command
"""

from .formula import *  # noqa: F401,F403
from .trivalent import *  # noqa: F401,F403
from .hilbert import *  # noqa: F401,F403
from .semantics import *  # noqa: F401,F403
from . import formula, trivalent, hilbert, semantics, scenario  # noqa: F401

__version__ = "0.1.0"
