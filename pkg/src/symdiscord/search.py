"""Deterministic grid search plus Nelder-Mead refinement over measurement axes.

Axes are parameterized by unconstrained angles ``(theta, phi)``; the map
to the unit sphere is smooth and periodic, so the simplex can cross the
poles freely.  Results are folded back onto the upper hemisphere before
being reported.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .axis import X_AXIS, Y_AXIS, Z_AXIS, ProjectiveAxis
from .measurement import one_sided_conditional_entropy, two_sided_mutual_information, unit_vectors

ONE_SIDED_GRID = (64, 128)
TWO_SIDED_GRID = (16, 36)
NM_FATOL = 1e-10
NM_XATOL = 1e-9
NM_MAXITER = 500
TIE_TOL = 1e-12
ONE_SIDED_STARTS = 3
TWO_SIDED_STARTS = 4

_LOG2 = math.log(2.0)


@dataclass(frozen=True)
class SearchResult:
    value: float
    axes: tuple
    evaluations: int
    converged: bool


def hemisphere_grid(n_theta, n_phi):
    """Angles ``(theta, phi)`` covering the upper hemisphere, theta-major."""
    theta = np.linspace(0.0, math.pi / 2, n_theta)
    phi = 2 * math.pi * np.arange(n_phi) / n_phi
    tt, pp = np.meshgrid(theta, phi, indexing="ij")
    return tt.ravel(), pp.ravel()


# -- scalar objectives (plain floats; called thousands of times per refinement) --

def _xlogx(p):
    return p * math.log(p) if p > 0.0 else 0.0


def _h_bloch(r):
    if r >= 1.0:
        return 0.0
    p, q = 0.5 * (1 + r), 0.5 * (1 - r)
    return -(_xlogx(p) + _xlogx(q)) / _LOG2


def _dir(theta, phi):
    st = math.sin(theta)
    return st * math.cos(phi), st * math.sin(phi), math.cos(theta)


def _components_lists(components):
    a, b, t = components
    return [float(x) for x in a], [float(x) for x in b], [[float(x) for x in row] for row in t]


def _cond_entropy_scalar(comp, measured, theta, phi):
    a, b, t = comp
    v = _dir(theta, phi)
    if measured == "B":
        local, other = b, a
        tv = [t[k][0] * v[0] + t[k][1] * v[1] + t[k][2] * v[2] for k in range(3)]
    else:
        local, other = a, b
        tv = [t[0][k] * v[0] + t[1][k] * v[1] + t[2][k] * v[2] for k in range(3)]
    proj = local[0] * v[0] + local[1] * v[1] + local[2] * v[2]
    total = 0.0
    for s in (1.0, -1.0):
        w = 1.0 + s * proj
        if w <= 2e-12:
            continue
        n0, n1, n2 = other[0] + s * tv[0], other[1] + s * tv[1], other[2] + s * tv[2]
        r = math.sqrt(n0 * n0 + n1 * n1 + n2 * n2) / w
        total += 0.5 * w * _h_bloch(r)
    return total


def _two_sided_mi_scalar(comp, x):
    a, b, t = comp
    u = _dir(x[0], x[1])
    v = _dir(x[2], x[3])
    au = a[0] * u[0] + a[1] * u[1] + a[2] * u[2]
    bv = b[0] * v[0] + b[1] * v[1] + b[2] * v[2]
    utv = sum(u[k] * (t[k][0] * v[0] + t[k][1] * v[1] + t[k][2] * v[2]) for k in range(3))
    hab = 0.0
    for si in (1.0, -1.0):
        for sj in (1.0, -1.0):
            p = 0.25 * (1 + si * au + sj * bv + si * sj * utv)
            if p > 0.0:
                hab -= p * math.log(p)
    ha = -(_xlogx(max(0.5 * (1 + au), 0.0)) + _xlogx(max(0.5 * (1 - au), 0.0)))
    hb = -(_xlogx(max(0.5 * (1 + bv), 0.0)) + _xlogx(max(0.5 * (1 - bv), 0.0)))
    return (ha + hb - hab) / _LOG2


def _nelder_mead(fun, x0, step):
    x0 = np.asarray(x0, dtype=float)
    simplex = np.vstack([x0] + [x0 + step * e for e in np.eye(len(x0))])
    res = minimize(fun, x0, method="Nelder-Mead",
                   options={"initial_simplex": simplex, "xatol": NM_XATOL,
                            "fatol": NM_FATOL, "maxiter": NM_MAXITER})
    return res.x, float(res.fun), int(res.nfev), bool(res.success)


def _pick(candidates):
    """Lowest objective; near-ties resolved by lexicographic axis angles."""
    best = min(c[0] for c in candidates)
    close = [c for c in candidates if c[0] <= best + TIE_TOL]
    return min(close, key=lambda c: c[1])


def _distinct_best(order, values, count, min_gap=1e-9):
    chosen = []
    for idx in order:
        if all(abs(values[idx] - values[j]) > min_gap for j in chosen):
            chosen.append(int(idx))
        if len(chosen) == count:
            break
    return chosen


def minimize_conditional_entropy(components, measured, grid=ONE_SIDED_GRID, starts=ONE_SIDED_STARTS):
    """Axis on ``measured`` minimizing the conditional entropy of the other qubit."""
    theta, phi = hemisphere_grid(*grid)
    values = one_sided_conditional_entropy(components, measured, unit_vectors(theta, phi))
    order = np.argsort(values, kind="stable")
    comp = _components_lists(components)
    step = 0.5 * math.pi / max(grid[0] - 1, 1)

    def fun(x):
        return _cond_entropy_scalar(comp, measured, x[0], x[1])

    evaluations = values.size
    candidates = []
    for idx in _distinct_best(order, values, starts):
        x, _, nfev, ok = _nelder_mead(fun, (theta[idx], phi[idx]), step)
        evaluations += nfev
        for xx, good in ((x, ok), ((theta[idx], phi[idx]), True)):
            axis = ProjectiveAxis(float(xx[0]), float(xx[1])).canonical()
            val = _cond_entropy_scalar(comp, measured, axis.theta, axis.phi)
            candidates.append((val, (axis.theta, axis.phi), axis, good))
    val, _, axis, ok = _pick(candidates)
    return SearchResult(val, (axis,), evaluations, ok)


def maximize_two_sided(components, seeds=(), grid=TWO_SIDED_GRID, starts=TWO_SIDED_STARTS):
    """Axis pair maximizing the mutual information left after dephasing both qubits.

    ``seeds`` are extra ``(axis_a, axis_b)`` starting points, typically the
    one-sided optima.  The Pauli pairs and the best equal-axes grid pair are
    always refined.
    """
    a, b, t = components
    theta, phi = hemisphere_grid(*grid)
    w = unit_vectors(theta, phi)
    au = w @ a
    bv = w @ b
    utv = (w @ t) @ w.T
    si = np.array([1.0, 1.0, -1.0, -1.0])
    sj = np.array([1.0, -1.0, 1.0, -1.0])
    p = 0.25 * (1 + si * au[:, None, None] + sj * bv[None, :, None] + (si * sj) * utv[:, :, None])
    p = np.clip(p, 0.0, 1.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        plogp = np.where(p > 0, p * np.log2(np.where(p > 0, p, 1.0)), 0.0)
    hab = -plogp.sum(-1)
    ha = np.array([_h_bloch(abs(x)) for x in au])
    hb = np.array([_h_bloch(abs(x)) for x in bv])
    mi = ha[:, None] + hb[None, :] - hab
    flat = -mi.ravel()
    order = np.argsort(flat, kind="stable")
    m = w.shape[0]

    starts_x = []
    for idx in _distinct_best(order, flat, starts):
        i, j = divmod(idx, m)
        starts_x.append((theta[i], phi[i], theta[j], phi[j]))
    diag = int(np.argmax(np.diag(mi)))
    starts_x.append((theta[diag], phi[diag], theta[diag], phi[diag]))
    for ax in (X_AXIS, Y_AXIS, Z_AXIS):
        starts_x.append((ax.theta, ax.phi, ax.theta, ax.phi))
    for ua, vb in seeds:
        starts_x.append((ua.theta, ua.phi, vb.theta, vb.phi))
        # best partner on the grid for each seeded side
        i = int(np.argmax(one_side_row(components, ua, w)))
        starts_x.append((ua.theta, ua.phi, theta[i], phi[i]))
        j = int(np.argmax(one_side_row(components, vb, w, seeded="B")))
        starts_x.append((theta[j], phi[j], vb.theta, vb.phi))

    comp = _components_lists(components)
    step = 0.5 * math.pi / max(grid[0] - 1, 1)

    def fun(x):
        return -_two_sided_mi_scalar(comp, x)

    evaluations = flat.size
    candidates = []
    seen = set()
    for x0 in starts_x:
        key = tuple(round(float(x), 12) for x in x0)
        if key in seen:
            continue
        seen.add(key)
        x, _, nfev, ok = _nelder_mead(fun, x0, step)
        evaluations += nfev
        for xx, good in ((x, ok), (x0, True)):
            ua = ProjectiveAxis(float(xx[0]), float(xx[1])).canonical()
            vb = ProjectiveAxis(float(xx[2]), float(xx[3])).canonical()
            val = fun((ua.theta, ua.phi, vb.theta, vb.phi))
            candidates.append((val, (ua.theta, ua.phi, vb.theta, vb.phi), (ua, vb), good))
    val, _, axes, ok = _pick(candidates)
    return SearchResult(-val, axes, evaluations, ok)


def one_side_row(components, fixed, w, seeded="A"):
    """Two-sided mutual information with one axis fixed and the other ranging over ``w``."""
    if seeded == "A":
        return two_sided_mutual_information(components, fixed.vector, w)
    return two_sided_mutual_information(components, w, fixed.vector)
