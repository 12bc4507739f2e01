"""Dense complex linear algebra for one- and two-qubit operators.

Matrices are plain ``numpy`` arrays of dtype ``complex128`` with shape
(2, 2) or (4, 4).  Subsystem A is always the left (slow) tensor index.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError

HERMITIAN_TOL = 1e-10
JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100

_PAULI = (
    np.array([[1, 0], [0, 1]], dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


@dataclass(frozen=True)
class EigenDecomposition:
    """Spectrum of a Hermitian matrix.

    ``eigenvalues`` is ascending; column ``k`` of ``eigenvectors`` belongs
    to ``eigenvalues[k]``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self):
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def as_matrix(m, dims=(2, 4)):
    """Coerce ``m`` to a square complex array of an allowed dimension."""
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] not in dims:
        raise InvalidArgumentError(f"expected a square matrix of dimension {dims}, got shape {arr.shape}")
    return arr


def pauli(k):
    """Return the identity (k=0) or the Pauli matrix sigma_k (k=1,2,3)."""
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool) or not 0 <= k <= 3:
        raise InvalidArgumentError(f"Pauli index must be 0..3, got {k!r}")
    return _PAULI[k].copy()


def kron(left, right):
    """Tensor product of two 2x2 operators, ``left`` acting on subsystem A."""
    left = as_matrix(left, dims=(2,))
    right = as_matrix(right, dims=(2,))
    return np.kron(left, right)


def partial_trace(rho, keep):
    """Reduce a 4x4 operator to subsystem ``keep`` ("A" or "B")."""
    rho = as_matrix(rho, dims=(4,))
    t = rho.reshape(2, 2, 2, 2)  # indices (a, b, a', b')
    if keep == "A":
        return np.einsum("ijkj->ik", t)
    if keep == "B":
        return np.einsum("ijil->jl", t)
    raise InvalidArgumentError(f"subsystem must be 'A' or 'B', got {keep!r}")


def is_hermitian(m, tol=HERMITIAN_TOL):
    m = np.asarray(m)
    return bool(np.max(np.abs(m - m.conj().T)) <= tol)


def hermitian_eigen(m, tol=HERMITIAN_TOL):
    """Diagonalize a Hermitian matrix by cyclic complex Jacobi rotations.

    Parameters
    ----------
    m : array_like
        2x2 or 4x4 matrix, Hermitian to within ``tol`` entrywise.

    Returns
    -------
    EigenDecomposition
        Ascending real eigenvalues and orthonormal eigenvectors.
    """
    a = as_matrix(m)
    if not is_hermitian(a, tol):
        raise InvalidArgumentError("matrix is not Hermitian within tolerance")
    a = 0.5 * (a + a.conj().T)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    offdiag = ~np.eye(n, dtype=bool)
    threshold = JACOBI_TOL * max(1.0, np.linalg.norm(a))

    for _ in range(JACOBI_MAX_SWEEPS):
        off = np.linalg.norm(a[offdiag])
        if off < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r < 1e-300:
                    continue
                phase = apq / r
                app, aqq = a[p, p].real, a[q, q].real
                theta = 0.5 * np.arctan2(-2.0 * r, app - aqq)
                # keep the rotation small; a shift of pi/2 zeroes the same entry
                if theta > np.pi / 4:
                    theta -= np.pi / 2
                elif theta < -np.pi / 4:
                    theta += np.pi / 2
                c, s = np.cos(theta), np.sin(theta)
                g = np.eye(n, dtype=complex)
                g[p, p] = c
                g[p, q] = s
                g[q, p] = -s * phase.conjugate()
                g[q, q] = c * phase.conjugate()
                a = g.conj().T @ a @ g
                a[p, q] = a[q, p] = 0.0
                v = v @ g
    else:
        raise RuntimeError("Jacobi eigensolver did not converge")

    w = np.diag(a).real
    order = np.argsort(w, kind="stable")
    return EigenDecomposition(eigenvalues=w[order], eigenvectors=v[:, order])


def eigvalsh(m):
    """Ascending eigenvalues of a Hermitian matrix."""
    return hermitian_eigen(m).eigenvalues
