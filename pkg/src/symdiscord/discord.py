"""Classical correlation, quantum discord and their symmetric versions.

Numeric quantities optimize over projective measurements (see
:mod:`symdiscord.search`); closed forms exist for Bell-diagonal and
X-real states.  Subsystem labels name the *measured* qubit: ``C_A`` is
the classical correlation obtained by measuring A.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidArgumentError, OptimizerFailureError
from .information import (bell_mutual_information, binary_entropy, mutual_information, shannon_entropy,
                          x_mutual_information)
from .search import maximize_two_sided, minimize_conditional_entropy
from .states import bell_diagonal, bloch_components, validate_density, x_eigenvalues, x_state

CLAMP_TOL = 1e-8
FAMILY_TOL = 1e-12


@dataclass(frozen=True)
class OptimizationResult:
    """Optimized correlation value and the measurement axes attaining it."""

    value: float
    axes: tuple
    evaluations: int
    converged: bool


def _clamp(value, name):
    if value < -CLAMP_TOL:
        raise OptimizerFailureError(f"{name} = {value:.3e} is negative beyond tolerance")
    return max(value, 0.0)


def _other(measured):
    if measured not in ("A", "B"):
        raise InvalidArgumentError(f"subsystem must be 'A' or 'B', got {measured!r}")
    return "B" if measured == "A" else "A"


def classical_one_sided(rho, measured, *, components=None):
    """Classical correlation when ``measured`` is measured projectively."""
    _other(measured)
    rho = validate_density(rho, dim=4)
    comp = components or bloch_components(rho)
    a, b, _ = comp
    unmeasured = b if measured == "A" else a
    s_x = binary_entropy(0.5 * (1 + min(float(np.linalg.norm(unmeasured)), 1.0)))
    res = minimize_conditional_entropy(comp, measured)
    return OptimizationResult(max(s_x - res.value, 0.0), res.axes, res.evaluations, res.converged)


def quantum_discord(rho, measured):
    """``I(rho) - C_measured(rho)``."""
    rho = validate_density(rho, dim=4)
    c = classical_one_sided(rho, measured).value
    return _clamp(mutual_information(rho) - c, f"Q_{measured}")


def classical_symmetric(rho, *, components=None, seeds=None):
    """Largest mutual information left after local projective measurements on both qubits.

    When ``seeds`` is None the one-sided optima are computed and used as
    starting points.
    """
    rho = validate_density(rho, dim=4)
    comp = components or bloch_components(rho)
    if seeds is None:
        ua = minimize_conditional_entropy(comp, "A").axes[0]
        vb = minimize_conditional_entropy(comp, "B").axes[0]
        seeds = [(ua, vb)]
    res = maximize_two_sided(comp, seeds=seeds)
    return OptimizationResult(max(res.value, 0.0), res.axes, res.evaluations, res.converged)


def symmetric_discord(rho):
    """``I(rho) - C_S(rho)``."""
    rho = validate_density(rho, dim=4)
    return _clamp(mutual_information(rho) - classical_symmetric(rho).value, "Q_S")


# -- closed forms ---------------------------------------------------------

def bell_classical_symmetric_analytic(c):
    """Symmetric (and one-sided) classical correlation of a Bell-diagonal state.

    Depends only on ``kappa = max |c_k|``.
    """
    s = bell_diagonal(c)
    kappa = max(abs(x) for x in s.c)
    total = 0.0
    for sign in (1, -1):
        x = 1 + sign * kappa
        if x > 0:
            total += 0.5 * x * math.log2(x)
    return max(total, 0.0)


def bell_quantum_discord_analytic(c):
    return max(bell_mutual_information(c) - bell_classical_symmetric_analytic(c), 0.0)


def x_classical_analytic(c, a3, b3, measured):
    """Two-branch closed form of the one-sided classical correlation of an X-real state.

    Branch 1 is the measurement along z, branch 2 along the stronger of
    the x/y correlations.
    """
    s = x_state(c, a3, b3)
    c1, c2, c3 = s.c
    if _other(measured) == "A":
        zeta_x, zeta_y = a3, b3
    else:
        zeta_x, zeta_y = b3, a3
    s_x = binary_entropy(0.5 * (1 + zeta_x))
    s_y = binary_entropy(0.5 * (1 + zeta_y))
    branch_z = shannon_entropy(x_eigenvalues((0.0, 0.0, c3), a3, b3)) - s_y
    cmax = max(abs(c1), abs(c2))
    r = min(math.hypot(zeta_x, cmax), 1.0)
    branch_perp = binary_entropy(0.5 * (1 + r))
    return max(s_x - min(branch_z, branch_perp), 0.0)


def x_quantum_discord_analytic(c, a3, b3, measured):
    return max(x_mutual_information(c, a3, b3) - x_classical_analytic(c, a3, b3, measured), 0.0)


def discord_asymmetry(c, a3, b3):
    """``|Q_A - Q_B|`` for an X-real state, from the closed forms."""
    return abs(x_quantum_discord_analytic(c, a3, b3, "A") - x_quantum_discord_analytic(c, a3, b3, "B"))


# -- aggregate report ---------------------------------------------------

QUANTITIES = ("I", "C_A", "C_B", "C_S", "Q_A", "Q_B", "Q_S", "D_AB")


@dataclass(frozen=True)
class CorrelationReport:
    """All correlation quantities of one state, in bits.

    ``analytic`` holds closed-form values for whichever quantities have one
    (empty when the state is not Bell-diagonal or X-real).
    """

    I: float
    C_A: float
    C_B: float
    C_S: float
    Q_A: float
    Q_B: float
    Q_S: float
    D_AB: float
    axes: dict = field(default_factory=dict)
    analytic: dict = field(default_factory=dict)
    family: str = "general"

    def values(self):
        return {q: getattr(self, q) for q in QUANTITIES}


def detect_family(components, tol=FAMILY_TOL):
    """Classify Pauli components as ``"bell_diagonal"``, ``"x_state"`` or ``"general"``.

    Returns the family name and, for the two known families, the
    parameters ``(c, a3, b3)``.
    """
    a, b, t = components
    off = t - np.diag(np.diag(t))
    if np.max(np.abs(off)) > tol or max(abs(a[0]), abs(a[1]), abs(b[0]), abs(b[1])) > tol:
        return "general", None
    c = tuple(float(x) for x in np.diag(t))
    a3, b3 = float(a[2]), float(b[2])
    if abs(a3) <= tol and abs(b3) <= tol:
        return "bell_diagonal", (c, 0.0, 0.0)
    return "x_state", (c, a3, b3)


def analytic_values(family, params):
    """Closed-form quantities for a known family (subset of :data:`QUANTITIES`)."""
    if family == "bell_diagonal":
        c = params[0]
        i = bell_mutual_information(c)
        cc = bell_classical_symmetric_analytic(c)
        q = max(i - cc, 0.0)
        return {"I": i, "C_A": cc, "C_B": cc, "C_S": cc, "Q_A": q, "Q_B": q, "Q_S": q, "D_AB": 0.0}
    if family == "x_state":
        c, a3, b3 = params
        i = x_mutual_information(c, a3, b3)
        ca = x_classical_analytic(c, a3, b3, "A")
        cb = x_classical_analytic(c, a3, b3, "B")
        qa, qb = max(i - ca, 0.0), max(i - cb, 0.0)
        return {"I": i, "C_A": ca, "C_B": cb, "Q_A": qa, "Q_B": qb, "D_AB": abs(qa - qb)}
    return {}


def full_report(rho):
    """Numeric correlation report, with closed forms attached when available."""
    rho = validate_density(rho, dim=4)
    comp = bloch_components(rho)
    i = mutual_information(rho)
    res_a = classical_one_sided(rho, "A", components=comp)
    res_b = classical_one_sided(rho, "B", components=comp)
    res_s = classical_symmetric(rho, components=comp, seeds=[(res_a.axes[0], res_b.axes[0])])
    q_a = _clamp(i - res_a.value, "Q_A")
    q_b = _clamp(i - res_b.value, "Q_B")
    q_s = _clamp(i - res_s.value, "Q_S")
    family, params = detect_family(comp)
    return CorrelationReport(
        I=i, C_A=res_a.value, C_B=res_b.value, C_S=res_s.value,
        Q_A=q_a, Q_B=q_b, Q_S=q_s, D_AB=abs(q_a - q_b),
        axes={"C_A": res_a.axes, "C_B": res_b.axes, "C_S": res_s.axes},
        analytic=analytic_values(family, params),
        family=family,
    )
