"""Von Neumann entropy and quantum mutual information, in bits."""

import numpy as np

from .errors import InvalidStateError
from .linalg import eigvalsh, partial_trace
from .states import PSD_TOL, bell_eigenvalues, validate_density, x_eigenvalues


def shannon_entropy(probs):
    """Entropy in bits of a probability vector; ``0 log 0 = 0``.

    Entries in ``[-PSD_TOL, 0)`` are treated as zero; anything more
    negative raises :class:`InvalidStateError`.
    """
    p = np.asarray(probs, dtype=float)
    if p.size and p.min() < -PSD_TOL:
        raise InvalidStateError(f"negative probability/eigenvalue {p.min():.6g}", min_eigenvalue=float(p.min()))
    p = np.clip(p, 0.0, 1.0)
    nz = p[p > 0]
    return float(-np.sum(nz * np.log2(nz))) + 0.0


def binary_entropy(p):
    return shannon_entropy([p, 1.0 - p])


def von_neumann_entropy(rho):
    """``-Tr(rho log2 rho)`` of a 2x2 or 4x4 density matrix."""
    rho = validate_density(rho)
    return shannon_entropy(eigvalsh(rho))


def mutual_information(rho):
    """``S(rho_A) + S(rho_B) - S(rho_AB)``, clamped at zero."""
    rho = validate_density(rho, dim=4)
    value = (von_neumann_entropy(partial_trace(rho, "A"))
             + von_neumann_entropy(partial_trace(rho, "B"))
             - von_neumann_entropy(rho))
    return max(value, 0.0)


def bell_mutual_information(c):
    """Closed-form mutual information of a Bell-diagonal state: 2 - H(lambda)."""
    lams = bell_eigenvalues(c)
    return max(2.0 - shannon_entropy(lams), 0.0)


def x_mutual_information(c, a3, b3):
    """Closed-form mutual information of an X-real state."""
    lams = x_eigenvalues(c, a3, b3)
    s_a = binary_entropy((1 + a3) / 2)
    s_b = binary_entropy((1 + b3) / 2)
    return max(s_a + s_b - shannon_entropy(lams), 0.0)
