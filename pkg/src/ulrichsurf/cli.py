"""Command-line front end.

Every subcommand renders the same computed object either as a plain text
table or as JSON; the table is a rendering of the JSON dictionary, never a
recomputation.  Exit codes: 0 success, 1 usage or validation error, 2 a
verification command found a failing check, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog
from .classify import classify
from .enumeration import enumerate_bounded, enumerate_rank2_exact
from .errors import InvariantViolation, RankTooHigh, UlrichSurfError
from .invariants import ChernData, derived_invariants, embedding_sanity
from .lattice import DivisorClass
from .ulrich import (
    line_numeric_check,
    rank_numeric_check,
    special_rank2_chern,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CHECK_FAILED = 2
EXIT_INTERNAL = 3


def _parse_coeffs(text: str) -> DivisorClass:
    try:
        return DivisorClass(tuple(int(part) for part in text.split(",")))
    except ValueError:
        raise UlrichSurfError(f"bad coefficient list {text!r}; expected e.g. 1,5")


def _load_surface(args):
    if args.builtin and args.surface:
        raise UlrichSurfError("give exactly one of --builtin and --surface")
    if args.builtin:
        return catalog.builtin_surface(args.builtin)
    if args.surface:
        return catalog.parse_surface(Path(args.surface).read_text())
    raise UlrichSurfError("a surface is required: use --builtin NAME or --surface FILE")


def _is_scalar_list(value) -> bool:
    return isinstance(value, list) and not any(
        isinstance(entry, (dict, list)) for entry in value
    )


def _render_table(data, indent: str = "") -> str:
    lines = []
    if isinstance(data, dict):
        for key, value in data.items():
            if _is_scalar_list(value):
                lines.append(f"{indent}{key}: {value}")
            elif isinstance(value, (dict, list)):
                lines.append(f"{indent}{key}:")
                lines.append(_render_table(value, indent + "  "))
            else:
                lines.append(f"{indent}{key}: {value}")
    elif isinstance(data, list):
        for value in data:
            if _is_scalar_list(value):
                lines.append(f"{indent}- {value}")
            elif isinstance(value, (dict, list)):
                lines.append(_render_table(value, indent + "  "))
            else:
                lines.append(f"{indent}- {value}")
    else:
        lines.append(f"{indent}{data}")
    return "\n".join(line for line in lines if line)


def _emit(args, data: dict) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(_render_table(data))


def _divisor_list(divisors) -> list[list[int]]:
    return [list(D.coeffs) for D in divisors]


def cmd_info(args) -> int:
    S = _load_surface(args)
    inv = derived_invariants(S)
    data = {"surface": S.name or "(unnamed)", **inv.to_dict()}
    if inv.N is not None:
        data["embedding_sanity"] = embedding_sanity(S).to_dict()
    else:
        data["embedding_sanity"] = "unavailable (needs pg = q = 0, non_special = true)"
    _emit(args, data)
    return EXIT_OK


def cmd_check_line(args) -> int:
    S = _load_surface(args)
    D = _parse_coeffs(args.divisor)
    report = line_numeric_check(S, D)
    _emit(args, {"surface": S.name, "divisor": list(D.coeffs), **report.to_dict()})
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_check_rank(args) -> int:
    S = _load_surface(args)
    F = ChernData(args.rank, _parse_coeffs(args.c1), args.c2)
    report = rank_numeric_check(S, F)
    _emit(
        args,
        {
            "surface": S.name,
            "rank": F.rank,
            "c1": list(F.c1.coeffs),
            "c2": F.c2,
            **report.to_dict(),
        },
    )
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_enumerate(args) -> int:
    S = _load_surface(args)
    if args.bound is not None:
        solutions = enumerate_bounded(S, args.bound)
        method = f"bounded search, box [-{args.bound}, {args.bound}]"
    else:
        try:
            solutions = enumerate_rank2_exact(S)
        except RankTooHigh:
            raise UlrichSurfError(
                "lattice rank exceeds 2; rerun with --bound B for a bounded search"
            )
        method = "exact rank-2 solver"
    _emit(
        args,
        {
            "surface": S.name,
            "method": method,
            "count": len(solutions),
            "solutions": _divisor_list(solutions),
            "note": "numerical candidates only",
        },
    )
    return EXIT_OK


def cmd_special_chern(args) -> int:
    S = _load_surface(args)
    F = special_rank2_chern(S)
    _emit(
        args,
        {
            "surface": S.name,
            "rank": F.rank,
            "c1": list(F.c1.coeffs),
            "c2": F.c2,
        },
    )
    return EXIT_OK


def cmd_classify(args) -> int:
    S = _load_surface(args)
    _emit(args, {"surface": S.name, **classify(S).to_dict()})
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        _emit(
            args,
            {
                "builtins": [
                    {"pattern": pattern, "description": description}
                    for pattern, description in catalog.builtin_names()
                ]
            },
        )
        return EXIT_OK
    report = catalog.verify_table1()
    _emit(args, report.to_dict())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_clifford(args) -> int:
    _emit(args, catalog.clifford_report(args.a, args.m).to_dict())
    return EXIT_OK


def cmd_convert(args) -> int:
    S = _load_surface(args)
    sys.stdout.write(catalog.serialize_surface(S))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ulrichsurf",
        description="Numerical Ulrich-bundle conditions on polarized surfaces",
    )
    surface_parent = argparse.ArgumentParser(add_help=False)
    surface_parent.add_argument("--builtin", help="builtin surface name")
    surface_parent.add_argument("--surface", help="surface document file")
    format_parent = argparse.ArgumentParser(add_help=False)
    format_parent.add_argument(
        "--format", choices=("table", "json"), default="table"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser(
        "info", parents=[surface_parent, format_parent],
        help="derived invariants and embedding sanity checks",
    ).set_defaults(func=cmd_info)

    p = sub.add_parser(
        "check-line", parents=[surface_parent, format_parent],
        help="numerical Ulrich conditions for a line bundle",
    )
    p.add_argument("--divisor", required=True, help="comma-separated coefficients")
    p.set_defaults(func=cmd_check_line)

    p = sub.add_parser(
        "check-rank", parents=[surface_parent, format_parent],
        help="numerical Ulrich conditions for arbitrary Chern data",
    )
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--c1", required=True, help="comma-separated coefficients")
    p.add_argument("--c2", type=int, required=True)
    p.set_defaults(func=cmd_check_rank)

    p = sub.add_parser(
        "enumerate", parents=[surface_parent, format_parent],
        help="enumerate line-bundle candidates",
    )
    p.add_argument("--bound", type=int, help="use the bounded search in [-B, B]")
    p.set_defaults(func=cmd_enumerate)

    sub.add_parser(
        "special-chern", parents=[surface_parent, format_parent],
        help="Chern data of the special rank-2 bundle",
    ).set_defaults(func=cmd_special_chern)

    sub.add_parser(
        "classify", parents=[surface_parent, format_parent],
        help="existence / stability / wildness / moduli verdicts",
    ).set_defaults(func=cmd_classify)

    p = sub.add_parser(
        "catalog", parents=[format_parent], help="list builtins or verify the P4 table"
    )
    p.add_argument("action", choices=("list", "verify"))
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser(
        "clifford", parents=[format_parent],
        help="Clifford-index report for the cubic-points family",
    )
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_clifford)

    sub.add_parser(
        "convert", parents=[surface_parent, format_parent],
        help="canonicalize a surface document",
    ).set_defaults(func=cmd_convert)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        _report_error(args, exc, "internal")
        return EXIT_INTERNAL
    except UlrichSurfError as exc:
        _report_error(args, exc, "validation")
        return EXIT_USAGE


def _report_error(args, exc: Exception, category: str) -> None:
    if getattr(args, "format", "table") == "json":
        payload = {
            "error": {
                "category": category,
                "type": type(exc).__name__,
                "message": str(exc),
            }
        }
        print(json.dumps(payload, indent=2), file=sys.stderr)
    else:
        print(f"error ({type(exc).__name__}): {exc}", file=sys.stderr)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
