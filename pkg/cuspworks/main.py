# cuspworks/main.py
"""Command-line entry point: ``cuspworks tjurina | singular | fiber | verify | suites``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence

from . import __version__
from .core.cyclo_arith import CycloNumber
from .core.errors import (
    CuspworksError,
    ExactFactorizationFailed,
    ParseError,
    ToleranceAmbiguity,
    UnknownProfile,
    UnknownSuite,
)
from .core.poly_core import monomial_str
from .core.poly_parser import parse_polynomial, parse_scalar
from .core.singularity_lab import (
    DeformationPoint,
    GermPresentation,
    fiber_product_singular_locus,
    singular_locus,
    tjurina_basis,
)
from .core.solver_profiles import SOLVER_PROFILES, get_profile
from .core.suite_presets import get_suite, list_suites
from .core.verification_report import run_suite

logger = logging.getLogger("cuspworks")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class _UsageError(Exception):
    pass


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def _emit(payload, as_json: bool, lines: Sequence[str]) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def _error_payload(exc: Exception, hint: str | None = None) -> dict:
    payload = {"error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ParseError):
        payload["message"] = exc.message
        payload["position"] = exc.position
    if hint:
        payload["fallback"] = hint
    return payload


# --- subcommands ---


def cmd_tjurina(args: argparse.Namespace) -> int:
    variables = [v.strip() for v in args.vars.split(",")] if args.vars else None
    germ = GermPresentation.parse(args.expr, variables)
    basis = [monomial_str(germ.f.table, m) for m in tjurina_basis(germ)]
    payload = {"basis": basis, "tjurina": len(basis)}
    _emit(
        payload,
        args.json,
        [f"basis: {', '.join(basis) if basis else '(empty)'}", f"tjurina: {len(basis)}"],
    )
    return EXIT_OK


def _coordinate(text: str, flag: str) -> CycloNumber:
    try:
        return parse_scalar(text)
    except ParseError as exc:
        raise ParseError(f"{flag}: {exc.message}", exc.position) from exc


def cmd_singular(args: argparse.Namespace) -> int:
    point = DeformationPoint(
        _coordinate(args.lam, "--lambda"),
        _coordinate(args.mu, "--mu"),
        _coordinate(args.nu, "--nu"),
        _coordinate(args.sigma, "--sigma"),
    )
    records = singular_locus(point, mode=args.mode, profile=get_profile(args.profile))
    lines = [f"fiber over {point}: {len(records)} singular point(s)"]
    for r in records:
        coords = ", ".join(
            f"{c.real:.10g}{c.imag:+.10g}j" if isinstance(c, complex) else str(c) for c in r.coords
        )
        lines.append(
            f"  ({coords})  {r.klass.value}  hessian rank {r.hessian_rank}"
            f"  multiplicity {r.multiplicity}"
        )
    _emit([r.to_dict() for r in records], args.json, lines)
    return EXIT_OK


def cmd_fiber(args: argparse.Namespace) -> int:
    b = parse_polynomial(args.b)
    points = fiber_product_singular_locus(b, mode=args.mode, profile=get_profile(args.profile))
    lines = [f"fiber product over B = {b}: {len(points)} singular point(s)"]
    lines += [f"  t0 = {p.t0}  vanishing order {p.vanishing_order}" for p in points]
    _emit([p.to_dict() for p in points], args.json, lines)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    suite = get_suite(args.suite)
    report = run_suite(suite, seed=args.seed, profile=get_profile(args.profile), jobs=args.jobs)
    _emit(report.to_dict(), args.json, report.lines())
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_suites(args: argparse.Namespace) -> int:
    payload = {
        "suites": [
            {"id": s.id, "name": s.name, "description": s.description, "checks": list(s.checks)}
            for s in list_suites()
        ],
        "profiles": [
            {"id": p.id, "name": p.name, "description": p.description}
            for p in SOLVER_PROFILES.values()
        ],
    }
    lines = [f"{s.id:9} {len(s.checks):3} checks  {s.description}" for s in list_suites()]
    lines += [f"profile {p.id}: {p.description}" for p in SOLVER_PROFILES.values()]
    _emit(payload, args.json, lines)
    return EXIT_OK


# --- argument parsing ---


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="cuspworks",
        description="Exact computations around the threefold cusp x^2 - y^3 - z^2 + w^3.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--profile", default="default", help="solver profile id")

    p = sub.add_parser("tjurina", help="monomial basis of the Tjurina algebra of a germ")
    p.add_argument("expr", help="polynomial, e.g. 'x^2-y^3-z^2+w^3'")
    p.add_argument("--vars", help="comma-separated germ variables (default: all)")
    common(p)
    p.set_defaults(func=cmd_tjurina)

    p = sub.add_parser("singular", help="singular points of a fiber of the versal family")
    p.add_argument("-l", "--lambda", dest="lam", default="0", help="lambda (e.g. 1, -1/2, 1+eps)")
    p.add_argument("-m", "--mu", default="0")
    p.add_argument("-n", "--nu", default="0", help="nu; the family carries -nu*w")
    p.add_argument("-s", "--sigma", default="0")
    p.add_argument("--mode", choices=("exact", "numeric"), default="exact")
    common(p)
    p.set_defaults(func=cmd_singular)

    p = sub.add_parser("fiber", help="singular points of {X^2 - Y^3 = B(t) = U^2 - V^3}")
    p.add_argument("b", help="univariate polynomial B, e.g. 't^6 - 1'")
    p.add_argument("--mode", choices=("exact", "numeric"), default="exact")
    common(p)
    p.set_defaults(func=cmd_fiber)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", default="all", help="local, S, C, fa, blowup, friedman or all")
    p.add_argument("--seed", type=int, default=0, help="seed of the randomized checks")
    p.add_argument("--jobs", type=int, default=1, help="checks run in parallel")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("suites", help="list suites and solver profiles")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_suites)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI; returns 0 on success, 1 on a failed check or solver error, 2 on bad input."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"cuspworks: error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    _configure_logging(args.verbose)
    as_json = getattr(args, "json", False)
    try:
        return args.func(args)
    except (ParseError, UnknownSuite, UnknownProfile, ValueError) as exc:
        error, code, hint = exc, EXIT_USAGE, None
    except (ExactFactorizationFailed, ToleranceAmbiguity) as exc:
        error, code = exc, EXIT_FAILED
        hint = getattr(exc, "fallback", None) if getattr(args, "mode", None) == "exact" else None
    except CuspworksError as exc:
        error, code, hint = exc, EXIT_FAILED, None

    payload = _error_payload(error, hint)
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        text = f"cuspworks: {payload['error']}: {payload['message']}"
        if "position" in payload:
            text += f" (at position {payload['position']})"
        if hint:
            text += f"; retry with {hint}"
        print(text, file=sys.stderr)
    logger.debug("Command %s failed", args.command, exc_info=error)
    return code


if __name__ == "__main__":
    sys.exit(main())
