import math

import numpy as np
import pytest

from symdiscord.axis import X_AXIS, Z_AXIS
from symdiscord.errors import InvalidStateError
from symdiscord.linalg import eigvalsh, partial_trace, pauli
from symdiscord.sampling import random_bell_c, random_cc_spec, random_x_params
from symdiscord.states import (BlochState, ClassicalClassicalSpec, bell_diagonal, bell_eigenvalues,
                               bloch_components, classical_classical, reduced_bloch, to_density,
                               validate_density, x_eigenvalues, x_state)


def test_maximally_mixed():
    assert np.allclose(to_density(BlochState()), np.eye(4) / 4)
    assert np.allclose(bell_eigenvalues((0, 0, 0)), 0.25)


def test_bell_state_is_projector():
    ket = np.array([1, 0, 0, 1]) / math.sqrt(2)
    rho = to_density(bell_diagonal((1, -1, 1)))
    assert np.allclose(rho, np.outer(ket, ket), atol=1e-15)
    assert sorted(bell_eigenvalues((1, -1, 1))) == [0, 0, 0, 1]


def test_bell_diagonal_example_spectrum():
    rho = to_density(bell_diagonal((0.6, 0, 0)))
    assert np.allclose(np.diag(rho), 0.25)
    assert np.allclose(sorted(bell_eigenvalues((0.6, 0, 0))), [0.1, 0.1, 0.4, 0.4])
    assert np.allclose(eigvalsh(rho), [0.1, 0.1, 0.4, 0.4], atol=1e-12)


def test_bell_diagonal_rejects_outside_tetrahedron():
    with pytest.raises(InvalidStateError) as exc:
        bell_diagonal((1, 1, 1))
    assert exc.value.label == "lambda_11"
    assert exc.value.min_eigenvalue == pytest.approx(-0.5)


def test_x_state_reduces_to_bell_diagonal():
    c = (0.3, -0.2, 0.1)
    assert np.array_equal(to_density(x_state(c, 0, 0)), to_density(bell_diagonal(c)))


def test_x_state_validity():
    # direct substitution: sqrt(0.36 + 0.09) = 0.6708 -> all four >= 0
    x_state((0.6, 0, 0), 0, 0.3)
    assert np.allclose(sorted(x_eigenvalues((0.6, 0, 0), 0, 0.3)),
                       [0.08229490168751577] * 2 + [0.41770509831248426] * 2)
    with pytest.raises(InvalidStateError):
        # sqrt(0.36 + 0.81) > 1 -> (1 - 1.0817)/4 < 0
        x_state((0.6, 0, 0), 0, 0.9)


def test_x_eigenvalue_examples():
    assert np.allclose(sorted(x_eigenvalues((0.6, 0, 0), 0, 0)), [0.1, 0.1, 0.4, 0.4])
    assert np.allclose(sorted(x_eigenvalues((0, 0, 0), 0.5, 0)), [0.125, 0.125, 0.375, 0.375])


def test_closed_form_spectra_match_eigensolver(rng):
    for _ in range(300):
        c = random_bell_c(rng)
        lam = bell_eigenvalues(c)
        assert abs(lam.sum() - 1) < 1e-15
        assert np.max(np.abs(np.sort(lam) - eigvalsh(to_density(bell_diagonal(c))))) <= 1e-10
        c, a3, b3 = random_x_params(rng)
        lam = x_eigenvalues(c, a3, b3)
        assert abs(lam.sum() - 1) < 1e-14
        assert np.max(np.abs(np.sort(lam) - eigvalsh(to_density(x_state(c, a3, b3))))) <= 1e-10


def test_bloch_round_trip(rng):
    for _ in range(200):
        c, a3, b3 = random_x_params(rng)
        s = x_state(c, a3, b3)
        a, b, t = bloch_components(to_density(s))
        assert np.allclose(a, s.a, atol=1e-12)
        assert np.allclose(b, s.b, atol=1e-12)
        assert np.allclose(t, np.diag(s.c), atol=1e-12)


def test_general_bloch_state_checked_with_eigensolver():
    s = BlochState(a=(0.3, 0.1, 0.0), b=(0.0, 0.2, 0.1), c=(0.2, 0.1, -0.1))
    rho = to_density(s)
    assert abs(np.trace(rho) - 1) < 1e-12
    with pytest.raises(InvalidStateError):
        BlochState(a=(0.9, 0, 0), b=(0, 0.9, 0), c=(0.9, 0, 0))
    with pytest.raises(InvalidStateError):
        BlochState(a=(1.2, 0, 0))


def test_reduced_bloch():
    assert np.array_equal(reduced_bloch(bell_diagonal((0.2, 0.1, 0.3)), "A"), [0, 0, 0])
    s = x_state((0.1, 0, 0), 0.3, -0.2)
    assert np.array_equal(reduced_bloch(s, "B"), [0, 0, -0.2])
    for sub in ("A", "B"):
        r = partial_trace(to_density(s), sub)
        vec = [np.trace(r @ pauli(k)).real for k in (1, 2, 3)]
        assert np.allclose(vec, reduced_bloch(s, sub), atol=1e-12)


def test_classical_classical_uniform():
    spec = ClassicalClassicalSpec(np.full((2, 2), 0.25), X_AXIS, Z_AXIS)
    assert np.allclose(classical_classical(spec), np.eye(4) / 4)


def test_classical_classical_direct_summation():
    spec = ClassicalClassicalSpec(np.diag([0.5, 0.5]), Z_AXIS, Z_AXIS)
    assert np.allclose(classical_classical(spec), np.diag([0.5, 0, 0, 0.5]))

    spec = ClassicalClassicalSpec(np.diag([0.8, 0.2]), X_AXIS, X_AXIS)
    a, b, t = bloch_components(classical_classical(spec))
    # 0.8 P+ x P+ + 0.2 P- x P- summed by hand: a_1 = b_1 = 0.6, T_11 = 1
    assert np.allclose(a, [0.6, 0, 0])
    assert np.allclose(b, [0.6, 0, 0])
    assert np.allclose(t, np.diag([1, 0, 0]))


def test_classical_classical_always_valid(rng):
    for _ in range(100):
        validate_density(classical_classical(random_cc_spec(rng)))


def test_density_matrix_is_read_only():
    rho = to_density(bell_diagonal((0.1, 0.2, 0.3)))
    with pytest.raises(ValueError):
        rho[0, 0] = 1
