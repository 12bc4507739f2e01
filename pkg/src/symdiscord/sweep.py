"""Parameter sweeps over the Bell-diagonal and X-real families, written as CSV."""

import csv
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .discord import QUANTITIES, analytic_values, classical_one_sided, classical_symmetric
from .errors import InvalidArgumentError, InvalidStateError
from .information import mutual_information
from .states import to_density, x_state

FAMILY_PARAMS = {
    "bell_diagonal": ("c1", "c2", "c3"),
    "x_state": ("c1", "c2", "c3", "a3", "b3"),
}
SKIP = "NA"


@dataclass(frozen=True)
class SweepSpec:
    """Grid over one or two family parameters; the rest held at ``fixed``.

    ``varied`` is a sequence of ``(name, min, max, steps)``; the first
    entry is the slow (outer) index of the output rows.
    """

    family: str
    varied: tuple
    quantity: str
    fixed: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILY_PARAMS:
            raise InvalidArgumentError(f"unknown family {self.family!r}")
        if self.quantity not in QUANTITIES:
            raise InvalidArgumentError(f"unknown quantity {self.quantity!r}")
        allowed = FAMILY_PARAMS[self.family]
        if not 1 <= len(self.varied) <= 2:
            raise InvalidArgumentError("vary one or two parameters")
        names = [v[0] for v in self.varied]
        if len(set(names)) != len(names):
            raise InvalidArgumentError("a parameter is varied twice")
        for name, lo, hi, steps in self.varied:
            if name not in allowed:
                raise InvalidArgumentError(f"{name!r} is not a parameter of {self.family}")
            if name in self.fixed:
                raise InvalidArgumentError(f"{name!r} is both fixed and varied")
            if int(steps) != steps or steps < 2:
                raise InvalidArgumentError(f"{name}: steps must be an integer >= 2")
            if not lo < hi:
                raise InvalidArgumentError(f"{name}: min must be below max")
        for name in self.fixed:
            if name not in allowed:
                raise InvalidArgumentError(f"{name!r} is not a parameter of {self.family}")

    @property
    def names(self):
        return tuple(v[0] for v in self.varied)

    def axes(self):
        return [grid_values(lo, hi, int(n)) for _, lo, hi, n in self.varied]

    def points(self):
        """Parameter dicts in row-major order over the varied parameters."""
        base = {p: 0.0 for p in FAMILY_PARAMS[self.family]}
        base.update(self.fixed)
        for combo in product(*self.axes()):
            params = dict(base)
            params.update(zip(self.names, combo))
            yield combo, params


@dataclass(frozen=True)
class SweepRecord:
    params: tuple
    value: float = None  # None marks an unphysical grid point


def grid_values(lo, hi, steps):
    # exact endpoints and an exact zero for symmetric ranges with odd steps
    return [lo + (hi - lo) * k / (steps - 1) for k in range(steps)]


def quantity_value(params, quantity, mode="analytic"):
    """Value of ``quantity`` for the state with the given family parameters.

    Returns None when the parameters do not describe a valid state.  In
    ``analytic`` mode quantities without a closed form fall back to the
    numeric optimizer.
    """
    c = (params["c1"], params["c2"], params["c3"])
    a3, b3 = params.get("a3", 0.0), params.get("b3", 0.0)
    try:
        state = x_state(c, a3, b3)
    except InvalidStateError:
        return None
    if mode == "analytic":
        family = "bell_diagonal" if a3 == 0.0 and b3 == 0.0 else "x_state"
        closed = analytic_values(family, (c, a3, b3))
        if quantity in closed:
            return closed[quantity]
    elif mode != "numeric":
        raise InvalidArgumentError(f"unknown mode {mode!r}")
    return numeric_quantity(to_density(state), quantity)


def numeric_quantity(rho, quantity):
    if quantity == "I":
        return mutual_information(rho)
    if quantity in ("C_A", "C_B"):
        return classical_one_sided(rho, quantity[-1]).value
    if quantity == "C_S":
        return classical_symmetric(rho).value
    i = mutual_information(rho)
    if quantity in ("Q_A", "Q_B"):
        return max(i - classical_one_sided(rho, quantity[-1]).value, 0.0)
    if quantity == "Q_S":
        return max(i - classical_symmetric(rho).value, 0.0)
    if quantity == "D_AB":
        qa = max(i - classical_one_sided(rho, "A").value, 0.0)
        qb = max(i - classical_one_sided(rho, "B").value, 0.0)
        return abs(qa - qb)
    raise InvalidArgumentError(f"unknown quantity {quantity!r}")


def _evaluate(args):
    params, quantity, mode = args
    return quantity_value(params, quantity, mode)


def run_sweep(spec, mode="analytic", workers=1):
    """Evaluate every grid point; rows come back in grid order regardless of ``workers``."""
    points = list(spec.points())
    jobs = [(params, spec.quantity, mode) for _, params in points]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(_evaluate, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        values = [_evaluate(job) for job in jobs]
    return [SweepRecord(tuple(combo), value) for (combo, _), value in zip(points, values)]


def format_number(x):
    s = f"{x:.12g}"
    return "0" if s == "-0" else s


def write_csv(records, spec, fh):
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(list(spec.names) + ["value"])
    for rec in records:
        value = SKIP if rec.value is None else format_number(rec.value)
        writer.writerow([format_number(p) for p in rec.params] + [value])


def fig1_spec(c1=0.6, c2=0.0, c3=0.0, span=0.4, steps=81):
    """Discord asymmetry over the (a3, b3) plane of the X-real family."""
    return SweepSpec(
        family="x_state",
        varied=(("a3", -span, span, steps), ("b3", -span, span, steps)),
        quantity="D_AB",
        fixed={"c1": c1, "c2": c2, "c3": c3},
    )
