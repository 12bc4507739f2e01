"""Command-line entry point: ``analyze``, ``sweep`` and ``verify``.

Exit codes: 0 success, 2 usage/parse error, 3 invalid state, 4 I/O error,
5 verification failure.
"""

import argparse
import sys

import numpy as np

from .discord import QUANTITIES, analytic_values, detect_family, full_report
from .errors import InvalidArgumentError, InvalidStateError
from .states import bloch_components, to_density, validate_density, x_state
from .sweep import FAMILY_PARAMS, SweepSpec, fig1_spec, format_number, run_sweep, write_csv
from .verify import run_all, symmetric_vs_one_sided

EXIT_USAGE = 2
EXIT_STATE = 3
EXIT_IO = 4
EXIT_VERIFY = 5


class ParseError(Exception):
    pass


def read_matrix(path):
    """Read 16 ``re,im`` rows (row-major) into a 4x4 complex matrix."""
    try:
        with open(path) as fh:
            rows = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    if len(rows) != 16:
        raise ParseError(f"{path}: expected 16 're,im' rows, found {len(rows)}")
    entries = []
    for n, row in enumerate(rows, start=1):
        parts = row.split(",")
        if len(parts) != 2:
            raise ParseError(f"{path}: row {n} is not 're,im'")
        try:
            entries.append(complex(float(parts[0]), float(parts[1])))
        except ValueError as exc:
            raise ParseError(f"{path}: row {n}: {exc}") from exc
    return np.array(entries).reshape(4, 4)


def parse_vary(text):
    """``name=min:max:steps`` -> ``(name, min, max, steps)``."""
    try:
        name, rng = text.split("=", 1)
        lo, hi, steps = rng.split(":")
        return name.strip(), float(lo), float(hi), int(steps)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected name=min:max:steps, got {text!r}") from exc


def _state_flags(p, default=0.0):
    for name in ("c1", "c2", "c3", "a3", "b3"):
        p.add_argument(f"--{name}", type=float, default=default)


def build_parser():
    parser = argparse.ArgumentParser(prog="symdiscord", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="correlation report for one state")
    _state_flags(p)
    p.add_argument("--matrix", help="CSV of 16 're,im' rows, row-major")
    p.add_argument("--mode", choices=("analytic", "numeric", "both"), default="both")

    p = sub.add_parser("sweep", help="CSV grid of one quantity over a state family")
    _state_flags(p, default=None)
    p.add_argument("--family", choices=sorted(FAMILY_PARAMS), default="x_state")
    p.add_argument("--vary", type=parse_vary, action="append", default=[],
                   help="name=min:max:steps; give once or twice (default: the a3/b3 asymmetry plane)")
    p.add_argument("--quantity", choices=QUANTITIES, default="D_AB")
    p.add_argument("--mode", choices=("analytic", "numeric"), default="analytic")
    p.add_argument("--out", help="output CSV path (default: stdout)")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("verify", help="run the seeded self-check suites")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--samples", type=int, default=100)
    return parser


def _emit(lines, out):
    out.write("\n".join(lines) + "\n")


def _axes_text(axes):
    return ";".join(f"{format_number(a.theta)},{format_number(a.phi)}" for a in axes)


def cmd_analyze(args, out):
    if args.matrix:
        rho = validate_density(read_matrix(args.matrix), dim=4)
    else:
        rho = to_density(x_state((args.c1, args.c2, args.c3), args.a3, args.b3))
    family, params = detect_family(bloch_components(rho))
    lines = [f"family={family}"]
    closed = analytic_values(family, params) if args.mode != "numeric" else {}
    if args.mode == "analytic":
        if not closed:
            raise InvalidArgumentError("no closed form for a general state; use --mode numeric")
        lines += [f"{q}={format_number(closed[q]) if q in closed else 'NA'}" for q in QUANTITIES]
        _emit(lines, out)
        return 0
    rep = full_report(rho)
    for q, value in rep.values().items():
        lines.append(f"{q}={format_number(value)}")
    for name, axes in rep.axes.items():
        lines.append(f"axis_{name}={_axes_text(axes)}")
    if args.mode == "both":
        for q in QUANTITIES:
            if q in closed:
                lines.append(f"{q}_analytic={format_number(closed[q])}")
                lines.append(f"{q}_delta={format_number(getattr(rep, q) - closed[q])}")
    _emit(lines, out)
    return 0


def sweep_spec_from_args(args):
    fixed_flags = {n: getattr(args, n) for n in ("c1", "c2", "c3", "a3", "b3")}
    if not args.vary:
        spec = fig1_spec(c1=0.6 if fixed_flags["c1"] is None else fixed_flags["c1"],
                         c2=fixed_flags["c2"] or 0.0, c3=fixed_flags["c3"] or 0.0)
        return spec
    varied = tuple(args.vary)
    names = {v[0] for v in varied}
    fixed = {n: (v if v is not None else 0.0) for n, v in fixed_flags.items()
             if n in FAMILY_PARAMS[args.family] and n not in names}
    for n, v in fixed_flags.items():
        if v is not None and (n not in FAMILY_PARAMS[args.family] or n in names):
            raise InvalidArgumentError(f"--{n} cannot be fixed for this sweep")
    return SweepSpec(family=args.family, varied=varied, quantity=args.quantity, fixed=fixed)


def cmd_sweep(args, out):
    spec = sweep_spec_from_args(args)
    records = run_sweep(spec, mode=args.mode, workers=max(1, args.workers))
    if args.out:
        try:
            with open(args.out, "w", newline="") as fh:
                write_csv(records, spec, fh)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        write_csv(records, spec, out)
    return 0


def cmd_verify(args, out):
    results = run_all(seed=args.seed, samples=args.samples)
    lines = []
    for res in results:
        lines.append(f"{res.name}: {res.passed}/{res.total} {'PASS' if res.ok else 'FAIL'}")
        lines += [f"  {note}" for note in res.notes]
    info = symmetric_vs_one_sided(np.random.default_rng(args.seed), min(args.samples, 20))
    lines.append(f"{info.name} (info): {info.passed}/{info.total}")
    lines += [f"  {note}" for note in info.notes]
    ok = all(r.ok for r in results)
    lines.append("verify: PASS" if ok else "verify: FAIL")
    _emit(lines, out)
    return 0 if ok else EXIT_VERIFY


COMMANDS = {"analyze": cmd_analyze, "sweep": cmd_sweep, "verify": cmd_verify}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.samples < 1:
        parser.error("--samples must be at least 1")
    try:
        return COMMANDS[args.command](args, out)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidStateError as exc:
        print(f"error: invalid state: {exc}", file=sys.stderr)
        return EXIT_STATE
    except InvalidArgumentError as exc:
        # malformed density matrices land here as well as bad flag combinations
        code = EXIT_STATE if args.command == "analyze" and args.matrix else EXIT_USAGE
        print(f"error: {exc}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
