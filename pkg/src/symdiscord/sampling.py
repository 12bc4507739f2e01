"""Seeded random states and axes for property checks and the verify command."""

import numpy as np

from .axis import ProjectiveAxis
from .errors import InvalidStateError
from .states import ClassicalClassicalSpec, bell_diagonal, x_state


def random_axis(rng):
    v = rng.normal(size=3)
    return ProjectiveAxis.from_vector(v)


def random_bell_c(rng):
    """Uniform sample from the tetrahedron of valid Bell-diagonal correlations."""
    while True:
        c = rng.uniform(-1.0, 1.0, size=3)
        try:
            bell_diagonal(c)
        except InvalidStateError:
            continue
        return tuple(float(x) for x in c)


def random_x_params(rng):
    """Uniform sample of ``(c, a3, b3)`` over the valid X-real region."""
    while True:
        c = rng.uniform(-1.0, 1.0, size=3)
        a3, b3 = rng.uniform(-1.0, 1.0, size=2)
        try:
            x_state(c, a3, b3)
        except InvalidStateError:
            continue
        return tuple(float(x) for x in c), float(a3), float(b3)


def random_density(rng, rank=4):
    """Random two-qubit density matrix ``G G^dagger / Tr`` from a complex Ginibre matrix."""
    g = rng.normal(size=(4, rank)) + 1j * rng.normal(size=(4, rank))
    rho = g @ g.conj().T
    rho = rho / np.trace(rho).real
    return 0.5 * (rho + rho.conj().T)


def random_unitary(rng, n=2):
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_cc_spec(rng):
    p = rng.dirichlet(np.ones(4)).reshape(2, 2)
    p = p / p.sum()
    return ClassicalClassicalSpec(p, random_axis(rng), random_axis(rng))
