"""Two-qubit state families and density-matrix validation.

States in the diagonal-correlation Bloch form are

    rho = (1 + sum_k c_k s_k x s_k + a.s x 1 + 1 x b.s) / 4

Bell-diagonal states have ``a = b = 0``; X-real states keep only the
z components of ``a`` and ``b``.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .axis import ProjectiveAxis, projectors
from .errors import InvalidArgumentError, InvalidStateError
from .linalg import as_matrix, eigvalsh, is_hermitian, kron, pauli

PSD_TOL = 1e-10
TRACE_TOL = 1e-12
HERMITIAN_TOL = 1e-12

_EYE2 = np.eye(2, dtype=complex)
_SIGMA = [pauli(k) for k in (1, 2, 3)]
_LABELS = ("lambda_00", "lambda_01", "lambda_10", "lambda_11")


def _vec3(x, name):
    arr = np.asarray(x, dtype=float).reshape(-1)
    if arr.shape != (3,) or not np.all(np.isfinite(arr)):
        raise InvalidArgumentError(f"{name} must be a finite real 3-vector")
    return tuple(float(t) for t in arr)


def validate_density(m, dim=None):
    """Check Hermiticity, unit trace and PSD; return a read-only complex copy.

    Raises
    ------
    InvalidArgumentError
        Wrong shape, not Hermitian, or trace not 1.
    InvalidStateError
        Minimum eigenvalue below ``-PSD_TOL``.
    """
    dims = (dim,) if dim else (2, 4)
    rho = np.array(as_matrix(m, dims=dims))
    if not is_hermitian(rho, HERMITIAN_TOL):
        raise InvalidArgumentError("density matrix is not Hermitian")
    tr = np.trace(rho)
    if abs(tr - 1.0) > TRACE_TOL:
        raise InvalidArgumentError(f"density matrix trace is {tr.real:.15g}, expected 1")
    lam_min = eigvalsh(rho)[0]
    if lam_min < -PSD_TOL:
        raise InvalidStateError(f"density matrix has negative eigenvalue {lam_min:.6g}", min_eigenvalue=lam_min)
    rho.flags.writeable = False
    return rho


@dataclass(frozen=True)
class BlochState:
    """Two-qubit state with local vectors ``a``, ``b`` and diagonal correlations ``c``.

    Validated on construction; an unphysical parameter set raises
    :class:`InvalidStateError`.
    """

    a: tuple = (0.0, 0.0, 0.0)
    b: tuple = (0.0, 0.0, 0.0)
    c: tuple = (0.0, 0.0, 0.0)
    _rho: np.ndarray = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        a, b, c = _vec3(self.a, "a"), _vec3(self.b, "b"), _vec3(self.c, "c")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        for name, vec in (("a", a), ("b", b)):
            if math.hypot(*vec) > 1.0 + PSD_TOL:
                raise InvalidStateError(f"|{name}| = {math.hypot(*vec):.6g} exceeds 1")
        for k, ck in enumerate(c, start=1):
            if abs(ck) > 1.0 + PSD_TOL:
                raise InvalidStateError(f"|c{k}| = {abs(ck):.6g} exceeds 1")

        if self.is_x_state:
            lams = x_eigenvalues(c, a[2], b[2])
            k = int(np.argmin(lams))
            if lams[k] < -PSD_TOL:
                raise InvalidStateError(
                    f"eigenvalue {_LABELS[k]} = {lams[k]:.6g} is negative",
                    min_eigenvalue=lams[k], label=_LABELS[k])
        rho = _bloch_matrix(a, b, c)
        if not self.is_x_state:
            lam_min = eigvalsh(rho)[0]
            if lam_min < -PSD_TOL:
                raise InvalidStateError(f"state has negative eigenvalue {lam_min:.6g}", min_eigenvalue=lam_min)
        rho.flags.writeable = False
        object.__setattr__(self, "_rho", rho)

    @property
    def is_x_state(self):
        return self.a[0] == self.a[1] == self.b[0] == self.b[1] == 0.0

    @property
    def is_bell_diagonal(self):
        return not any(self.a) and not any(self.b)


def _bloch_matrix(a, b, c):
    rho = np.eye(4, dtype=complex)
    for k in range(3):
        rho += c[k] * kron(_SIGMA[k], _SIGMA[k])
        rho += a[k] * kron(_SIGMA[k], _EYE2)
        rho += b[k] * kron(_EYE2, _SIGMA[k])
    return rho / 4


def to_density(s):
    """Density matrix of a :class:`BlochState` (read-only array)."""
    return s._rho


def bell_eigenvalues(c):
    """Spectrum ``(l00, l01, l10, l11)`` of the Bell-diagonal state with correlations ``c``."""
    c1, c2, c3 = _vec3(c, "c")
    out = []
    for i in (0, 1):
        for j in (0, 1):
            out.append((1 + (-1) ** i * c1 - (-1) ** (i + j) * c2 + (-1) ** j * c3) / 4)
    return np.array(out)


def x_eigenvalues(c, a3, b3):
    """Spectrum ``(l00, l01, l10, l11)`` of the X-real state."""
    c1, c2, c3 = _vec3(c, "c")
    out = []
    for i in (0, 1):
        for j in (0, 1):
            sj = (-1) ** j
            root = math.hypot(c1 - sj * c2, a3 + sj * b3)
            out.append((1 + sj * c3 + (-1) ** i * root) / 4)
    return np.array(out)


def bell_diagonal(c):
    """Bell-diagonal state (maximally mixed marginals)."""
    return BlochState(c=c)


def x_state(c, a3, b3):
    """X-real state: diagonal correlations plus local fields along z."""
    return BlochState(a=(0.0, 0.0, a3), b=(0.0, 0.0, b3), c=c)


def reduced_bloch(s, subsystem):
    """Bloch vector of the marginal on ``subsystem``."""
    if subsystem == "A":
        return np.array(s.a)
    if subsystem == "B":
        return np.array(s.b)
    raise InvalidArgumentError(f"subsystem must be 'A' or 'B', got {subsystem!r}")


@dataclass(frozen=True)
class ClassicalClassicalSpec:
    """Joint distribution ``p[i, j]`` over the eigenbases of two local axes."""

    probabilities: np.ndarray
    axis_a: ProjectiveAxis
    axis_b: ProjectiveAxis

    def __post_init__(self):
        p = np.asarray(self.probabilities, dtype=float)
        if p.shape != (2, 2):
            raise InvalidArgumentError("probabilities must be a 2x2 array")
        if np.any(p < 0) or abs(p.sum() - 1.0) > TRACE_TOL:
            raise InvalidArgumentError("probabilities must be nonnegative and sum to 1")
        object.__setattr__(self, "probabilities", p)


def classical_classical(spec):
    """``sum_ij p_ij Pi_i^A x Pi_j^B`` as a validated density matrix."""
    pa = projectors(spec.axis_a)
    pb = projectors(spec.axis_b)
    rho = sum(spec.probabilities[i, j] * kron(pa[i], pb[j]) for i in (0, 1) for j in (0, 1))
    return validate_density(rho, dim=4)


def bloch_components(rho):
    """Return ``(a, b, T)`` with ``T[k, l] = Tr(rho s_k x s_l)``.

    Works for any 4x4 operator; for Hermitian input all parts are real.
    """
    rho = as_matrix(rho, dims=(4,))
    a = np.array([np.trace(rho @ kron(s, _EYE2)).real for s in _SIGMA])
    b = np.array([np.trace(rho @ kron(_EYE2, s)).real for s in _SIGMA])
    t = np.array([[np.trace(rho @ kron(sk, sl)).real for sl in _SIGMA] for sk in _SIGMA])
    return a, b, t


def bell_state():
    """Projector onto (|00> + |11>)/sqrt(2)."""
    return to_density(bell_diagonal((1.0, -1.0, 1.0)))
