"""Single-qubit projective measurement bases.

A complete von Neumann measurement on a qubit is fixed by a unit vector
``v`` on the Bloch sphere: the two projectors are ``(1 +/- v.sigma)/2``.
``v`` and ``-v`` give the same pair with labels swapped.
"""

import math
from dataclasses import dataclass

import numpy as np

from .linalg import pauli

_SIGMA = np.stack([pauli(1), pauli(2), pauli(3)])


@dataclass(frozen=True, order=True)
class ProjectiveAxis:
    """Measurement direction in spherical angles (radians)."""

    theta: float
    phi: float

    @classmethod
    def from_vector(cls, v):
        x, y, z = (float(t) for t in v)
        norm = math.sqrt(x * x + y * y + z * z)
        if norm == 0.0:
            raise ValueError("zero vector has no direction")
        theta = math.acos(max(-1.0, min(1.0, z / norm)))
        phi = math.atan2(y, x) % (2 * math.pi)
        return cls(theta, phi)

    @property
    def vector(self):
        st = math.sin(self.theta)
        return np.array([st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)])

    def canonical(self):
        """Representative of the antipodal pair {v, -v} on the upper hemisphere.

        Upper hemisphere means theta < pi/2, or theta == pi/2 with phi in [0, pi).
        """
        theta = self.theta % (2 * math.pi)
        phi = self.phi
        if theta > math.pi:
            theta = 2 * math.pi - theta
            phi += math.pi
        phi %= 2 * math.pi
        if theta > math.pi / 2:
            theta = math.pi - theta
            phi = (phi + math.pi) % (2 * math.pi)
        if theta == math.pi / 2 and phi >= math.pi:
            phi -= math.pi
        if theta == 0.0:
            phi = 0.0
        return ProjectiveAxis(theta, phi)


X_AXIS = ProjectiveAxis(math.pi / 2, 0.0)
Y_AXIS = ProjectiveAxis(math.pi / 2, math.pi / 2)
Z_AXIS = ProjectiveAxis(0.0, 0.0)


def bloch_operator(v):
    """``v . sigma`` for a real 3-vector."""
    return np.tensordot(np.asarray(v, dtype=float), _SIGMA, axes=1)


def projectors(axis):
    """Return ``(Pi_0, Pi_1) = ((1 + v.sigma)/2, (1 - v.sigma)/2)``."""
    vs = bloch_operator(axis.vector)
    one = np.eye(2, dtype=complex)
    return 0.5 * (one + vs), 0.5 * (one - vs)


def axis_v(axis):
    """Unit vector ``v`` such that sum_j Pi_j sigma_k Pi_j = v_k (v . sigma)."""
    return axis.vector


def rotation_from_u(u):
    """SU(2) element ``u0*1 + i(u1 s1 + u2 s2 + u3 s3)`` for a unit quadruple."""
    u0, u1, u2, u3 = u
    return u0 * np.eye(2) + 1j * bloch_operator((u1, u2, u3))


def v_from_u(u):
    """Direction measured by the basis ``R |j><j| R^dagger`` with ``R = rotation_from_u(u)``."""
    u0, u1, u2, u3 = u
    return np.array([
        2 * (u1 * u3 - u0 * u2),
        2 * (u2 * u3 + u0 * u1),
        u0 ** 2 - u1 ** 2 - u2 ** 2 + u3 ** 2,
    ])
