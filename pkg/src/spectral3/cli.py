"""Command-line front end: ``decompose``, ``bench`` and ``verify``.

Exit status is 0 on success, 1 on a usage error and 2 when the matrix has a
complex eigenvalue pair or a verification property fails.
"""

import argparse
import json
import logging
import math
import re
import sys

from . import bench, verify
from .eig3 import AngleMethod, NonRealSpectrum, eigenvalues
from .invariants import Route, derived_invariants, principal_invariants
from .mat3 import Mat3
from .oracle import CASE_I, CriticalCase, case_ii, sweep_grid
from .projectors import projectors_dual

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_matrix(tokens) -> Mat3:
    """Nine numbers, row-major, separated by commas and/or whitespace."""
    parts = [p for tok in tokens for p in re.split(r"[,\s]+", tok) if p]
    if len(parts) != 9:
        raise UsageError(f"expected 9 matrix entries, got {len(parts)}")
    try:
        values = [float(p) for p in parts]
    except ValueError as exc:
        raise UsageError(f"bad matrix entry: {exc}") from None
    if not all(math.isfinite(v) for v in values):
        raise UsageError("matrix entries must be finite")
    return Mat3(values)


def _num(x) -> str:
    return repr(float(x))


def decomposition(a: Mat3, route: Route, method: AngleMethod) -> dict:
    """All reported quantities as plain floats and strings."""
    triple = eigenvalues(a, route, method)
    proj = projectors_dual(a, route, method, triple)
    inv = principal_invariants(a)
    routes = {}
    for r in Route:
        d = derived_invariants(a, r)
        routes[r.value] = {"Delta": d.delta, "Delta_p": d.delta_p, "Delta_q": d.delta_q}
    return {
        "route": route.value,
        "angle": method.value,
        "eigenvalues": list(triple.values),
        "multiplicity": triple.multiplicity.value,
        "phi": triple.phi,
        "invariants": {"I1": inv.i1, "I2": inv.i2, "I3": inv.i3, **routes},
        "projectors": [{"eigenvalue": lam, "matrix": [list(row) for row in e.rows()]} for lam, e in proj],
    }


def _format_text(doc: dict) -> str:
    lines = [
        "eigenvalues: " + " ".join(_num(x) for x in doc["eigenvalues"]),
        f"multiplicity: {doc['multiplicity']}",
        f"phi: {_num(doc['phi'])}  (route {doc['route']}, angle {doc['angle']})",
        "invariants: " + "  ".join(f"{k}={_num(doc['invariants'][k])}" for k in ("I1", "I2", "I3")),
    ]
    for r in Route:
        vals = doc["invariants"][r.value]
        lines.append(f"  {r.value:<5} " + "  ".join(f"{k}={_num(v)}" for k, v in vals.items()))
    for k, p in enumerate(doc["projectors"], start=1):
        lines.append(f"E_{k} (lambda = {_num(p['eigenvalue'])}):")
        for row in p["matrix"]:
            lines.append("  " + "  ".join(f"{x: .17g}" for x in row))
    return "\n".join(lines)


def cmd_decompose(args) -> int:
    a = parse_matrix(args.matrix)
    try:
        doc = decomposition(a, Route(args.route), AngleMethod(args.angle))
    except NonRealSpectrum as exc:
        print(f"NonRealSpectrum: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except ArithmeticError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(_format_text(doc))
    return EXIT_OK


def cmd_bench(args) -> int:
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    unknown = [m for m in methods if m not in bench.METHODS]
    if not methods or unknown:
        raise UsageError(f"--methods must list some of {', '.join(bench.METHODS)}; got {args.methods!r}")
    if args.transform == "case2":
        if not args.gamma > 0:
            raise UsageError("--transform case2 needs --gamma > 0")
        transform = case_ii(args.gamma)
    else:
        transform = CASE_I
    if args.points_per_decade < 1:
        raise UsageError("--points-per-decade must be at least 1")
    try:
        grid = sweep_grid(args.delta_start, args.delta_stop, args.points_per_decade)
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    records = bench.run_sweep(CriticalCase(args.case), transform, methods, grid)
    if args.out in (None, "-"):
        bench.write_csv(records, sys.stdout)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            bench.write_csv(records, fh)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc.strerror or exc}") from None
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be positive")
    checks = verify.run_all(seed=args.seed, trials=args.trials, suites=args.suite)
    print(verify.format_report(checks))
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spectral3", description="Closed-form spectral decomposition of 3x3 matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="eigenvalues, invariants and eigenprojectors of one matrix")
    p.add_argument("matrix", nargs="+", help="9 entries, row-major, comma or space separated")
    p.add_argument("--route", choices=[r.value for r in Route], default=Route.SOP.value)
    p.add_argument("--angle", choices=[m.value for m in AngleMethod], default=AngleMethod.ARCTAN.value)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("bench", help="error sweep over a critical case, written as CSV")
    p.add_argument("--case", choices=[c.value for c in CriticalCase], required=True)
    p.add_argument("--transform", choices=("case1", "case2"), default="case1")
    p.add_argument("--gamma", type=float, default=1e-3)
    p.add_argument("--delta-start", type=float, default=1e-15)
    p.add_argument("--delta-stop", type=float, default=1.0)
    p.add_argument("--points-per-decade", type=int, default=4)
    p.add_argument("--methods", default="sop,naive", help="comma list of: " + ", ".join(bench.METHODS))
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--suite", action="append", choices=list(verify.SUITES), help="run only this suite (repeatable)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
