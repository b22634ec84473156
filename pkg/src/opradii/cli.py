"""Command-line front end.

Exit status: 0 on success, 1 when a verification finds a violation, 2 on
invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .bounds import bound_table, bound_table_csv, es_omega
from .errors import FactorizationError, ModelError, ValidationError
from .harness import SUITES, SuiteConfig, reproduce_constants
from .linalg import load_matrix, matrix_to_json
from .models import bergman_cell, jordan_cell, kernel_model
from .radii import numerical_radius, omega_rho
from .trigpoly import extremal_witness, trigpoly_to_json

EXIT_OK, EXIT_VIOLATION, EXIT_INVALID = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def parse_poly(text: str) -> np.ndarray:
    """Parse ``"re:im,re:im,..."`` (low to high degree) into complex coefficients."""
    items = [s.strip() for s in text.split(",")]
    out = []
    for i, item in enumerate(items):
        parts = item.split(":")
        if len(parts) != 2:
            raise ValidationError(f"--poly item {i} ({item!r}) must have the form re:im")
        try:
            out.append(complex(float(parts[0]), float(parts[1])))
        except ValueError:
            raise ValidationError(f"--poly item {i} ({item!r}) is not a pair of numbers") from None
    return np.array(out)


def _add_common(p: argparse.ArgumentParser, *names: str) -> None:
    flags = {
        "rho": dict(type=float, help="radius parameter rho > 0"),
        "matrix": dict(type=Path, help="matrix JSON file"),
        "n": dict(type=int, help="dimension / degree parameter"),
        "k": dict(type=int, help="power index"),
        "l": dict(type=int, help="second power index"),
        "poly": dict(type=str, help="polynomial as comma-separated re:im pairs, low to high"),
        "seed": dict(type=int, default=0, help="random seed (unsigned 64-bit)"),
        "trials": dict(type=int, help="number of random trials (per degree for trig)"),
        "tol": dict(type=float, help="tolerance"),
    }
    for name in names:
        p.add_argument(f"--{name}", **flags[name])
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", type=Path, help="write the output to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="opradii", description="Operator radii of constrained operators.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("radius", help="w_rho of a matrix (rho=1 norm, rho=2 numerical radius)")
    _add_common(p, "rho", "matrix", "tol")

    p = sub.add_parser("model", help="matrix of a model operator")
    p.add_argument("kind", choices=("jordan", "bergman", "kernel"))
    _add_common(p, "n", "poly")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", choices=("all",) + tuple(SUITES) + ("constants",))
    _add_common(p, "seed", "trials", "tol")

    p = sub.add_parser("bounds", help="closed-form constants (--k/--l keep only rows with those indices)")
    p.add_argument("what", choices=("table",))
    _add_common(p, "n", "k", "l")

    p = sub.add_parser("witness", help="positive trig polynomial attaining |c_k| = c_0 w_2(S_n*^k)")
    _add_common(p, "n", "k")
    return parser


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        out.write_text(text if text.endswith("\n") else text + "\n")


def _require(args, *names: str) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise ValidationError(f"{args.command} needs --{name}")


def _json_only(args) -> None:
    if args.format != "json":
        raise ValidationError("--format csv is only available for 'bounds table'")


def _cmd_radius(args) -> int:
    _json_only(args)
    _require(args, "matrix")
    rho = 2.0 if args.rho is None else args.rho
    A = load_matrix(args.matrix)
    if rho == 2.0:
        r = numerical_radius(A, tol=args.tol or 1e-8)
    else:
        r = omega_rho(A, rho, tol=args.tol or 1e-6)
    out = {"rho": rho, "value": r.value, "tolerance": r.tolerance, "dim": int(A.shape[0])}
    if r.theta is not None:
        out["theta"] = r.theta
    _emit(json.dumps(out, sort_keys=True), args.out)
    return EXIT_OK


def _cmd_model(args) -> int:
    _json_only(args)
    if args.kind in ("jordan", "bergman"):
        _require(args, "n")
        model = jordan_cell(args.n) if args.kind == "jordan" else bergman_cell(args.n)
    else:
        _require(args, "poly")
        model = kernel_model(parse_poly(args.poly))
    out = matrix_to_json(model.matrix)
    out["kind"] = model.kind
    out["roots"] = [{"root": [b.real, b.imag], "multiplicity": m} for b, m in model.roots]
    _emit(json.dumps(out, sort_keys=True), args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    _json_only(args)
    tolerances = {} if args.tol is None else {"bound": args.tol}
    cfg = SuiteConfig(seed=args.seed, trials=args.trials, tolerances=tolerances)
    names = list(SUITES) + ["constants"] if args.suite == "all" else [args.suite]
    reports = [reproduce_constants() if name == "constants" else SUITES[name](cfg) for name in names]
    ok = all(r.ok for r in reports)
    summary = {"ok": ok, "reports": [r.to_dict(include_margins=False) for r in reports]}
    sys.stdout.write(json.dumps(summary, sort_keys=True, indent=2) + "\n")
    if args.out is not None:
        full = {"ok": ok, "reports": [r.to_dict() for r in reports]}
        args.out.write_text(json.dumps(full, sort_keys=True, indent=2) + "\n")
    return EXIT_OK if ok else EXIT_VIOLATION


def _cmd_bounds(args) -> int:
    _require(args, "n")
    rows = bound_table(args.n)
    # rows without a k (or l) index are kept; indexed rows must match
    if args.k is not None:
        rows = [r for r in rows if r.k is None or r.k == args.k]
    if args.l is not None:
        rows = [r for r in rows if r.l is None or r.l == args.l]
    if args.format == "csv":
        _emit(bound_table_csv(rows), args.out)
    else:
        _emit(json.dumps([r.__dict__ for r in rows], sort_keys=True, indent=2), args.out)
    return EXIT_OK


def _cmd_witness(args) -> int:
    _json_only(args)
    _require(args, "n", "k")
    P = extremal_witness(args.n, args.k)
    out = {
        "n": args.n,
        "k": args.k,
        "ratio": abs(P.c(args.k)) / P.c0,
        "bound": es_omega(args.n, args.k),
        "poly": trigpoly_to_json(P),
    }
    _emit(json.dumps(out, sort_keys=True), args.out)
    return EXIT_OK


_COMMANDS = {
    "radius": _cmd_radius,
    "model": _cmd_model,
    "verify": _cmd_verify,
    "bounds": _cmd_bounds,
    "witness": _cmd_witness,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (ValidationError, ModelError, FactorizationError) as exc:
        print(f"opradii: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"opradii: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
