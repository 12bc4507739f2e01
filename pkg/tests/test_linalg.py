import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from symdiscord.errors import InvalidArgumentError
from symdiscord.linalg import hermitian_eigen, kron, partial_trace, pauli
from symdiscord.states import bell_diagonal, to_density

from .conftest import random_hermitian


def test_pauli_matrices():
    assert np.array_equal(pauli(0), np.eye(2))
    assert np.array_equal(pauli(3), np.diag([1, -1]))
    for k in (1, 2, 3):
        s = pauli(k)
        assert np.allclose(s, s.conj().T)
        assert abs(np.trace(s)) == 0
        assert abs(abs(np.linalg.det(s)) - 1) < 1e-15
        assert np.allclose(s @ s, np.eye(2))


@pytest.mark.parametrize("k", [-1, 4, 1.0, "x", True])
def test_pauli_rejects_bad_index(k):
    with pytest.raises(InvalidArgumentError):
        pauli(k)


def test_kron_examples():
    assert np.array_equal(kron(pauli(0), pauli(0)), np.eye(4))
    assert np.array_equal(kron(pauli(3), pauli(3)), np.diag([1, -1, -1, 1]))
    with pytest.raises(InvalidArgumentError):
        kron(np.eye(4), np.eye(2))


def test_kron_trace_and_bilinearity(rng):
    for _ in range(100):
        m, n = random_hermitian(rng, 2), random_hermitian(rng, 2)
        # brute-force oracle: explicit index expansion
        brute = np.zeros((4, 4), dtype=complex)
        for i in range(2):
            for j in range(2):
                for k in range(2):
                    for l in range(2):
                        brute[2 * i + k, 2 * j + l] = m[i, j] * n[k, l]
        assert np.allclose(kron(m, n), brute, atol=1e-14)
        assert abs(np.trace(kron(m, n)) - np.trace(m) * np.trace(n)) < 1e-12
        alpha = complex(*rng.normal(size=2))
        assert np.allclose(kron(alpha * m, n), alpha * kron(m, n), atol=1e-13)


def test_partial_trace_factorizes(rng):
    for _ in range(100):
        m, n = random_hermitian(rng, 2), random_hermitian(rng, 2)
        assert np.allclose(partial_trace(kron(m, n), "A"), m * np.trace(n), atol=1e-12)
        assert np.allclose(partial_trace(kron(m, n), "B"), n * np.trace(m), atol=1e-12)


def test_partial_trace_index_sum_oracle(rng):
    rho = random_hermitian(rng, 4)
    oracle_a = np.array([[sum(rho[2 * i + k, 2 * j + k] for k in range(2)) for j in range(2)] for i in range(2)])
    oracle_b = np.array([[sum(rho[2 * k + i, 2 * k + j] for k in range(2)) for j in range(2)] for i in range(2)])
    assert np.allclose(partial_trace(rho, "A"), oracle_a)
    assert np.allclose(partial_trace(rho, "B"), oracle_b)
    assert abs(np.trace(partial_trace(rho, "A")) - np.trace(rho)) < 1e-12


def test_partial_trace_of_bell_state(bell):
    assert np.allclose(partial_trace(bell, "A"), np.eye(2) / 2)
    with pytest.raises(InvalidArgumentError):
        partial_trace(bell, "C")


def test_eigen_examples():
    e = hermitian_eigen(np.diag([0.3, 0.1, 0.4, 0.2]))
    assert np.allclose(e.eigenvalues, [0.1, 0.2, 0.3, 0.4], atol=1e-15)
    assert np.allclose(hermitian_eigen(pauli(1)).eigenvalues, [-1, 1], atol=1e-15)
    rho = to_density(bell_diagonal((0.6, 0, 0)))
    assert np.allclose(hermitian_eigen(rho).eigenvalues, [0.1, 0.1, 0.4, 0.4], atol=1e-14)


def test_eigen_rejects_non_hermitian():
    with pytest.raises(InvalidArgumentError):
        hermitian_eigen(np.array([[0, 1], [0, 0]]))


def test_eigen_random_reconstruction(rng):
    for n in (2, 4):
        for _ in range(200):
            m = random_hermitian(rng, n)
            e = hermitian_eigen(m)
            v = e.eigenvectors
            assert np.max(np.abs(e.reconstruct() - m)) <= 1e-9
            assert np.max(np.abs(v.conj().T @ v - np.eye(n))) <= 1e-9
            assert abs(e.eigenvalues.sum() - np.trace(m).real) <= 1e-10
            assert np.all(np.diff(e.eigenvalues) >= 0)
            # LAPACK as an independent spectrum check
            assert np.allclose(e.eigenvalues, np.linalg.eigvalsh(m), atol=1e-10)


def test_eigen_degenerate_and_deterministic():
    m = np.diag([1.0, 1.0, 1.0, -1.0]).astype(complex)
    m[0, 1] = m[1, 0] = 1e-3
    e1, e2 = hermitian_eigen(m), hermitian_eigen(m)
    assert np.array_equal(e1.eigenvalues, e2.eigenvalues)
    assert np.array_equal(e1.eigenvectors, e2.eigenvectors)


finite = st.floats(-5, 5, allow_nan=False)


@settings(max_examples=60, deadline=None)
@given(arrays(np.float64, (2, 4, 4), elements=finite))
def test_eigen_property(parts):
    x = parts[0] + 1j * parts[1]
    m = x + x.conj().T
    e = hermitian_eigen(m)
    scale = max(1.0, np.abs(m).max())
    assert np.max(np.abs(e.reconstruct() - m)) <= 1e-9 * scale
