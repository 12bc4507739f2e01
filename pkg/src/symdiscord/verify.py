"""Seeded self-check suites comparing closed forms, identities and optimizers.

Each suite returns a :class:`SuiteResult`; ``run_all`` drives them from a
single seed so that repeated runs print identical text.
"""

from dataclasses import dataclass, field

import numpy as np

from .axis import projectors
from .discord import (bell_classical_symmetric_analytic, classical_one_sided, classical_symmetric,
                      full_report, symmetric_discord, x_classical_analytic)
from .information import (bell_mutual_information, mutual_information, shannon_entropy,
                          x_mutual_information)
from .linalg import eigvalsh, pauli
from .measurement import lpmm
from .sampling import random_axis, random_bell_c, random_cc_spec, random_density, random_x_params
from .states import bell_diagonal, bell_eigenvalues, bell_state, classical_classical, to_density
from .states import x_eigenvalues, x_state

IDENTITY_TOL = 1e-12
SPECTRUM_TOL = 1e-10
MONOTONE_TOL = 1e-10
BELL_TOL = 1e-6
CC_ZERO_TOL = 1e-6
CC_PERTURBED_MIN = 1e-3
X_AGREE_TOL = 1e-4
X_LOWER_TOL = 1e-6


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    total: int = 0
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        return self.passed == self.total

    def record(self, good, note=None):
        self.total += 1
        if good:
            self.passed += 1
        elif note:
            self.notes.append(note)


def measurement_identity(rng, samples):
    """sum_j Pi_j s_k Pi_j == v_k (v . s) for random axes and k = 1, 2, 3."""
    res = SuiteResult("identity")
    sigma = [pauli(k) for k in (1, 2, 3)]
    for _ in range(samples):
        axis = random_axis(rng)
        v = axis.vector
        vs = sum(v[k] * sigma[k] for k in range(3))
        p0, p1 = projectors(axis)
        for k in range(3):
            lhs = p0 @ sigma[k] @ p0 + p1 @ sigma[k] @ p1
            err = float(np.max(np.abs(lhs - v[k] * vs)))
            res.record(err <= IDENTITY_TOL, f"axis={axis} k={k + 1} err={err:.3e}")
    return res


def spectra(rng, samples):
    """Closed-form spectra and mutual informations against the eigensolver path."""
    res = SuiteResult("spectra")
    for _ in range(samples):
        c = random_bell_c(rng)
        rho = to_density(bell_diagonal(c))
        err = np.max(np.abs(np.sort(bell_eigenvalues(c)) - eigvalsh(rho)))
        err_i = abs(bell_mutual_information(c) - mutual_information(rho))
        res.record(err <= SPECTRUM_TOL and err_i <= SPECTRUM_TOL, f"bell c={c} err={max(err, err_i):.3e}")

        c, a3, b3 = random_x_params(rng)
        rho = to_density(x_state(c, a3, b3))
        lam = eigvalsh(rho)
        err = np.max(np.abs(np.sort(x_eigenvalues(c, a3, b3)) - lam))
        err_s = abs(shannon_entropy(x_eigenvalues(c, a3, b3)) - shannon_entropy(lam))
        err_i = abs(x_mutual_information(c, a3, b3) - mutual_information(rho))
        res.record(max(err, err_s, err_i) <= SPECTRUM_TOL,
                   f"x c={c} a3={a3} b3={b3} err={max(err, err_s, err_i):.3e}")
    return res


def monotonicity(rng, samples):
    """Dephasing both qubits never increases mutual information."""
    res = SuiteResult("monotonicity")
    for _ in range(samples):
        rho = random_density(rng)
        ua, vb = random_axis(rng), random_axis(rng)
        gap = mutual_information(lpmm(rho, ua, vb)) - mutual_information(rho)
        res.record(gap <= MONOTONE_TOL, f"gap={gap:.3e}")
    return res


def bell_analytic(rng, samples):
    """Numeric symmetric classical correlation vs the Bell-diagonal closed form."""
    res = SuiteResult("bell_analytic")
    for _ in range(samples):
        c = random_bell_c(rng)
        rep = full_report(to_density(bell_diagonal(c)))
        err_c = abs(rep.C_S - bell_classical_symmetric_analytic(c))
        err_q = max(abs(rep.Q_S - rep.Q_A), abs(rep.Q_S - rep.Q_B), abs(rep.Q_A - rep.Q_B))
        res.record(err_c <= BELL_TOL and err_q <= BELL_TOL,
                   f"c={c} |dC_S|={err_c:.3e} |dQ|={err_q:.3e}")
    return res


def theorem(rng, samples):
    """Classical-classical states have zero symmetric discord; Bell admixture breaks it."""
    res = SuiteResult("theorem")
    bell = bell_state()
    for _ in range(samples):
        spec = random_cc_spec(rng)
        rho = classical_classical(spec)
        rep = full_report(rho)
        zero = max(rep.Q_S, rep.Q_A, rep.Q_B)
        mixed = 0.9 * rho + 0.1 * bell
        qs = symmetric_discord(mixed)
        res.record(zero <= CC_ZERO_TOL and qs > CC_PERTURBED_MIN,
                   f"p={spec.probabilities.ravel().round(6).tolist()} Q_max={zero:.3e} Q_S(mixed)={qs:.3e}")
    return res


def x_analytic(rng, samples):
    """Numeric one-sided classical correlation vs the two-branch X-state formula.

    Disagreements beyond ``X_AGREE_TOL`` are listed but only a numeric value
    *below* the analytic candidate counts as a failure.
    """
    res = SuiteResult("x_analytic")
    for _ in range(samples):
        c, a3, b3 = random_x_params(rng)
        rho = to_density(x_state(c, a3, b3))
        for side in ("A", "B"):
            numeric = classical_one_sided(rho, side).value
            analytic = x_classical_analytic(c, a3, b3, side)
            delta = numeric - analytic
            res.record(delta >= -X_LOWER_TOL, f"BELOW c={c} a3={a3} b3={b3} side={side} delta={delta:.3e}")
            if abs(delta) > X_AGREE_TOL:
                res.notes.append(f"discrepancy c={c} a3={a3!r} b3={b3!r} side={side} "
                                 f"numeric={numeric:.9f} analytic={analytic:.9f}")
    return res


def symmetric_vs_one_sided(rng, samples):
    """Empirical record of C_S <= min(C_A, C_B) on random states (informational)."""
    res = SuiteResult("cs_le_min_c")
    for _ in range(samples):
        rho = random_density(rng)
        cs = classical_symmetric(rho).value
        cm = min(classical_one_sided(rho, "A").value, classical_one_sided(rho, "B").value)
        res.record(cs <= cm + 1e-8, f"C_S={cs:.9f} min(C_A,C_B)={cm:.9f}")
    return res


SUITES = (measurement_identity, spectra, monotonicity, bell_analytic, theorem, x_analytic)


def run_all(seed=42, samples=100, suites=SUITES):
    """Run each suite with its own child generator spawned from ``seed``."""
    children = np.random.SeedSequence(seed).spawn(len(suites))
    return [suite(np.random.default_rng(child), samples) for suite, child in zip(suites, children)]
