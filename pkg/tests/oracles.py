"""Independent reference implementations used by the tests.

Nothing here calls into the lattice or enumeration code under test: meets
come from a null-space computation, joins from a column-space basis,
valuations from itertools, and three-valued connectives from explicit tables.
"""

import itertools

import numpy as np

from qtruth.formula import And, Atom, Bottom, Iff, Identity, Implies, Not, Or, Top

# ------------------------------------------------------------------ linear algebra


def orth_projector(basis):
    """Projector onto the columns of ``basis`` (assumed linearly independent)."""
    if basis.shape[1] == 0:
        return np.zeros((basis.shape[0], basis.shape[0]), dtype=complex)
    q, _ = np.linalg.qr(basis)
    return q @ q.conj().T


def meet_oracle(p, q, tol=1e-8):
    """ran P ∩ ran Q = null space of the stacked system [(I-P); (I-Q)]."""
    n = p.shape[0]
    stacked = np.vstack([np.eye(n) - p, np.eye(n) - q])
    _, s, vh = np.linalg.svd(stacked)
    null = vh[np.sum(s > tol):].conj().T
    return orth_projector(null)


def join_oracle(p, q, tol=1e-8):
    """span(ran P ∪ ran Q) from the column space of [P Q]."""
    u, s, _ = np.linalg.svd(np.hstack([p, q]))
    return orth_projector(u[:, : np.sum(s > tol)])


def random_projector(rng, n, rank=None):
    if rank is None:
        rank = int(rng.integers(0, n + 1))
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    u, _ = np.linalg.qr(z)
    return orth_projector(u[:, :rank])


def random_unitary(rng, n):
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    u, _ = np.linalg.qr(z)
    return u


def commuting_pair(rng, n):
    """Two projectors diagonal in a shared random basis."""
    u = random_unitary(rng, n)
    a = rng.integers(0, 2, size=n)
    b = rng.integers(0, 2, size=n)
    return u @ np.diag(a) @ u.conj().T, u @ np.diag(b) @ u.conj().T


def nested_pair(rng, n):
    """P <= Q obtained by extending a basis of ran P."""
    u = random_unitary(rng, n)
    k = int(rng.integers(0, n + 1))
    j = int(rng.integers(0, k + 1))
    return orth_projector(u[:, :j]), orth_projector(u[:, :k])


def fro(a):
    return float(np.linalg.norm(a, "fro"))


# ------------------------------------------------------------------ logic


def valuations(names):
    """All bivalent valuations, first name most significant, False first."""
    for bits in itertools.product([False, True], repeat=len(names)):
        yield dict(zip(names, bits))


def eval_python(f, v):
    """Straightforward recursive evaluation using Python's own booleans."""
    if isinstance(f, Atom):
        return v[f.name]
    if isinstance(f, Top):
        return True
    if isinstance(f, Bottom):
        return False
    if isinstance(f, Not):
        return not eval_python(f.child, v)
    a, b = eval_python(f.left, v), eval_python(f.right, v)
    if isinstance(f, And):
        return a and b
    if isinstance(f, Or):
        return a or b
    if isinstance(f, Implies):
        return (not a) or b
    if isinstance(f, (Iff, Identity)):
        return a == b
    raise TypeError(f)


# weak-Kleene tables written out by hand, 'u' absorbing
NOT3 = {"t": "f", "f": "t", "u": "u"}
AND3 = {("t", "t"): "t", ("t", "f"): "f", ("f", "t"): "f", ("f", "f"): "f"}
OR3 = {("t", "t"): "t", ("t", "f"): "t", ("f", "t"): "t", ("f", "f"): "f"}
IMP3 = {("t", "t"): "t", ("t", "f"): "f", ("f", "t"): "t", ("f", "f"): "t"}
IFF3 = {("t", "t"): "t", ("t", "f"): "f", ("f", "t"): "f", ("f", "f"): "t"}


def eval3_oracle(f, v):
    """Three-valued evaluation over the strings 't', 'f', 'u'."""
    if isinstance(f, Atom):
        return v[f.name]
    if isinstance(f, Top):
        return "t"
    if isinstance(f, Bottom):
        return "f"
    if isinstance(f, Not):
        return NOT3[eval3_oracle(f.child, v)]
    a, b = eval3_oracle(f.left, v), eval3_oracle(f.right, v)
    if "u" in (a, b):
        return "u"
    table = {And: AND3, Or: OR3, Implies: IMP3, Iff: IFF3, Identity: IFF3}[type(f)]
    return table[(a, b)]
