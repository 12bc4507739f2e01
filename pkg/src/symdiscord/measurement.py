"""One-sided and two-sided projective measurements on two-qubit states.

Two evaluation routes are provided.  The matrix route (``measure_one_sided``,
``lpmm``) works on explicit operators and is the reference.  The Bloch
route (``one_sided_conditional_entropy``, ``two_sided_mutual_information``)
works on the Pauli expansion ``(a, b, T)`` and is vectorized over many
axes; the optimizers use it.
"""

from dataclasses import dataclass

import numpy as np

from .axis import ProjectiveAxis, axis_v, projectors  # noqa: F401  (re-exported)
from .errors import InvalidArgumentError
from .information import von_neumann_entropy
from .linalg import kron, partial_trace
from .states import validate_density

PROB_EPS = 1e-12
_EYE2 = np.eye(2, dtype=complex)


@dataclass(frozen=True)
class MeasurementOutcome:
    """Outcome probabilities and normalized conditional states of the unmeasured qubit.

    A conditional is ``None`` when its probability is at most ``PROB_EPS``.
    """

    probabilities: tuple
    conditionals: tuple


def _other(subsystem):
    if subsystem == "A":
        return "B"
    if subsystem == "B":
        return "A"
    raise InvalidArgumentError(f"subsystem must be 'A' or 'B', got {subsystem!r}")


def measure_one_sided(rho, measured, axis):
    """Measure ``measured`` along ``axis``; return the ensemble left on the other qubit."""
    rho = validate_density(rho, dim=4)
    keep = _other(measured)
    probs, conds = [], []
    for proj in projectors(axis):
        op = kron(proj, _EYE2) if measured == "A" else kron(_EYE2, proj)
        unnorm = partial_trace(op @ rho @ op, keep)
        p = float(np.trace(unnorm).real)
        probs.append(p)
        if p > PROB_EPS:
            cond = unnorm / p
            conds.append(0.5 * (cond + cond.conj().T))
        else:
            conds.append(None)
    return MeasurementOutcome(tuple(probs), tuple(conds))


def conditional_entropy(outcome):
    """``sum_j p_j S(rho_j)`` skipping zero-probability branches."""
    total = 0.0
    for p, cond in zip(outcome.probabilities, outcome.conditionals):
        if cond is not None and p > PROB_EPS:
            total += p * von_neumann_entropy(cond)
    return total


def lpmm(rho, axis_a, axis_b):
    """Local projective-measurement map: dephase both qubits in the given bases."""
    rho = validate_density(rho, dim=4)
    out = np.zeros((4, 4), dtype=complex)
    for pa in projectors(axis_a):
        for pb in projectors(axis_b):
            op = kron(pa, pb)
            out += op @ rho @ op
    return validate_density(0.5 * (out + out.conj().T), dim=4)


# -- Bloch route ---------------------------------------------------------

def unit_vectors(theta, phi):
    """Stack of unit vectors for broadcastable angle arrays, last axis = 3."""
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    st = np.sin(theta)
    return np.stack(np.broadcast_arrays(st * np.cos(phi), st * np.sin(phi), np.cos(theta)), axis=-1)


def _h2(r):
    """Entropy of a qubit with Bloch length ``r`` (array)."""
    r = np.clip(r, 0.0, 1.0)
    p = 0.5 * (1 + r)
    q = 0.5 * (1 - r)
    with np.errstate(divide="ignore", invalid="ignore"):
        hp = np.where(p > 0, -p * np.log2(np.where(p > 0, p, 1.0)), 0.0)
        hq = np.where(q > 0, -q * np.log2(np.where(q > 0, q, 1.0)), 0.0)
    return hp + hq


def _plogp(p):
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(p > 0, p * np.log2(np.where(p > 0, p, 1.0)), 0.0)


def one_sided_conditional_entropy(components, measured, v):
    """Vectorized ``S(X | measurement of Y along v)`` from Pauli components.

    Parameters
    ----------
    components : tuple
        ``(a, b, T)`` as returned by :func:`symdiscord.states.bloch_components`.
    measured : {"A", "B"}
        The measured qubit.
    v : ndarray, shape (..., 3)
        Measurement directions.
    """
    a, b, t = components
    if measured == "B":
        local, other, tv = b, a, np.asarray(v) @ t.T
    elif measured == "A":
        local, other, tv = a, b, np.asarray(v) @ t
    else:
        raise InvalidArgumentError(f"subsystem must be 'A' or 'B', got {measured!r}")
    proj = np.asarray(v) @ local
    total = 0.0
    for s in (1.0, -1.0):
        weight = 1.0 + s * proj  # 2 p_s
        num = other + s * tv
        length = np.linalg.norm(num, axis=-1)
        with np.errstate(divide="ignore", invalid="ignore"):
            r = np.where(weight > 2 * PROB_EPS, length / np.where(weight > 0, weight, 1.0), 0.0)
        total = total + np.where(weight > 2 * PROB_EPS, 0.5 * weight * _h2(r), 0.0)
    return total


def joint_probabilities(components, u, v):
    """Outcome table ``p[..., i, j]`` for measuring A along ``u`` and B along ``v``."""
    a, b, t = components
    u = np.asarray(u)
    v = np.asarray(v)
    au = u @ a
    bv = v @ b
    utv = np.einsum("...k,kl,...l->...", u, t, v)
    p = np.empty(np.broadcast(au, bv).shape + (2, 2))
    for i, si in enumerate((1.0, -1.0)):
        for j, sj in enumerate((1.0, -1.0)):
            p[..., i, j] = 0.25 * (1 + si * au + sj * bv + si * sj * utv)
    return p


def classical_mutual_information(p):
    """Mutual information in bits of joint tables ``p[..., 2, 2]``."""
    pa = p.sum(axis=-1)
    pb = p.sum(axis=-2)
    return (-_plogp(pa).sum(-1) - _plogp(pb).sum(-1) + _plogp(p).sum((-1, -2)))


def two_sided_mutual_information(components, u, v):
    """Vectorized ``I(lpmm(rho, u, v))`` from Pauli components."""
    p = np.clip(joint_probabilities(components, u, v), 0.0, 1.0)
    return classical_mutual_information(p)

