"""Command-line front end.

Subcommands: `list` (supported modules, the default), `gram` (Gram matrix
and invariants), `theta` (series coefficients), `verify` (golden suite)
and `validate-module` (check a module file).  Exit codes: 0 success,
1 verification or invariant failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .catalog import ModuleError, ModuleParseError, get_module, load_module_file, supported_modules
from .lattice import determinant, invariants, modular_level, smith_normal_form
from .ribbon import RootSystem
from .theta import theta_coefficients
from .verify import MODULE_KEYS, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _module_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--module", required=True, help="module family: A, D, E5, E9 or E21")
    parser.add_argument("--level", required=True, type=int, help="level k")


def _format_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("text", "json", "csv"), default="text", help="output format"
    )


def cmd_list(args) -> int:
    for name, k in supported_modules():
        mod = get_module(name, k)
        print(f"{name} {k} -> r_E={mod.rank}, lattice rank={2 * mod.rank}")
    return EXIT_OK


def cmd_gram(args) -> int:
    mod = get_module(args.module, args.level)
    rs = RootSystem(mod)
    G = rs.gram(rs.basis(args.basis))
    inv = invariants(G)
    if args.format == "json":
        payload = {
            "module": args.module,
            "level": args.level,
            "basis": args.basis,
            "gram": [[int(x) for x in row] for row in G],
            "determinant": str(inv.determinant),
            "modular_level": str(inv.modular_level),
            "snf": [str(d) for d in inv.elementary_divisors],
        }
        print(json.dumps(payload))
    elif args.format == "csv":
        for row in G:
            print(",".join(str(int(x)) for x in row))
        print(f"determinant,{inv.determinant}")
        print(f"modular_level,{inv.modular_level}")
        print("snf," + ",".join(str(d) for d in inv.elementary_divisors))
    else:
        for row in G:
            print(" ".join(f"{int(x):3d}" for x in row))
        print(f"determinant: {inv.determinant}")
        print(f"modular level: {inv.modular_level}")
        print(f"elementary divisors: {inv.elementary_divisors}")
    return EXIT_OK


def cmd_theta(args) -> int:
    if args.max_coeff < 0:
        raise ModuleError("--max-coeff must be non-negative")
    mod = get_module(args.module, args.level)
    rs = RootSystem(mod)
    series = theta_coefficients(rs.gram(), args.max_coeff, threads=args.threads)
    coeffs = series.coefficients
    if args.format == "json":
        payload = {
            "module": args.module,
            "level": args.level,
            "max_coeff": args.max_coeff,
            "coefficients": [str(c) for c in coeffs],
        }
        print(json.dumps(payload))
    elif args.format == "csv":
        for m, c in enumerate(coeffs):
            print(f"{m},{c}")
    else:
        print(",".join(str(c) for c in coeffs))
    return EXIT_OK


def cmd_verify(args) -> int:
    row = None
    if args.module is not None:
        if args.level is None:
            raise ModuleError("verify --module also needs --level")
        row = {"A": f"A{args.level}", "D": f"D{args.level}"}.get(args.module, args.module)
        known = set(MODULE_KEYS) | {"A0", "A5", "A6"}
        if row not in known:
            raise ModuleError(f"no golden data for ({args.module}, {args.level})")
    results = run_suite(suite=args.suite, module=row, threads=args.threads)
    failed = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{status}  {r.name}"
        if r.detail:
            line += f"  ({r.detail})"
        print(line)
        failed += not r.passed
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_FAIL


def cmd_validate_module(args) -> int:
    # parse problems exit 2 (usage); a well-formed file whose module fails
    # validation exits 1 (invariant failure)
    try:
        mod = load_module_file(args.path)
    except ModuleParseError:
        raise
    except ModuleError as exc:
        print(f"FAIL  {args.path}: {exc}")
        return EXIT_FAIL
    rs = RootSystem(mod)
    G = rs.gram()
    det = determinant(G)
    print(f"PASS  {mod.name}: level {mod.level}, rank {mod.rank}")
    print(f"      lattice determinant {det}, modular level {modular_level(G)}, "
          f"divisors {smith_normal_form(G)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperlat",
        description="higher-root lattices of SU(3) quantum modules",
    )
    sub = parser.add_subparsers(dest="command")

    sub.add_parser("list", help="print the supported modules")

    p_gram = sub.add_parser("gram", help="print a Gram matrix and its invariants")
    _module_arg(p_gram)
    p_gram.add_argument("--basis", choices=("B1", "B2", "B3"), default="B1")
    _format_arg(p_gram)

    p_theta = sub.add_parser("theta", help="print theta series coefficients")
    _module_arg(p_theta)
    p_theta.add_argument("--max-coeff", required=True, type=int, help="last index M of c_0..c_M")
    p_theta.add_argument("--threads", type=int, default=1)
    _format_arg(p_theta)

    p_verify = sub.add_parser("verify", help="run the golden verification suite")
    p_verify.add_argument("--suite", choices=("all", "fast"), default="all")
    p_verify.add_argument("--module", help="restrict to one module family")
    p_verify.add_argument("--level", type=int, help="level for --module")
    p_verify.add_argument("--threads", type=int, default=8)

    p_val = sub.add_parser("validate-module", help="validate a module data file")
    p_val.add_argument("path")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        None: cmd_list,
        "list": cmd_list,
        "gram": cmd_gram,
        "theta": cmd_theta,
        "verify": cmd_verify,
        "validate-module": cmd_validate_module,
    }
    try:
        return handlers[args.command](args)
    except ModuleParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ModuleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
