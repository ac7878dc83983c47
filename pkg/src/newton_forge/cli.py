"""Command-line front end.

Exit codes: 0 success (and polygon match for `verify`), 2 invalid input,
3 verification mismatch, 4 evaluation budget exceeded.  Reports go to
stdout and are byte-identical for identical inputs; timing goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import render, report as rpt
from .errors import BudgetExceededError, InvalidInstanceError, NewtonForgeError
from .lattice import ExponentMatrix
from .polygons import hodge_polygon, newton_polygon_from_orbits

_BUDGET_ENV = "NEWTON_FORGE_BUDGET"

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_MISMATCH = 3
EXIT_BUDGET = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="newton-forge",
        description=(
            "Newton and Hodge polygons of L-functions of diagonal exponential"
            " sums, with an exact character-sum verifier."
        ),
    )
    parser.add_argument(
        "--json", action="store_true", help="emit the structured JSON report"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("file", help="instance JSON file, or - for stdin")
        # SUPPRESS keeps a pre-subcommand --json from being clobbered.
        p.add_argument(
            "--json", action="store_true", default=argparse.SUPPRESS,
            help="emit the structured JSON report",
        )

    p_analyze = sub.add_parser("analyze", help="theoretical polygons and stability")
    add_common(p_analyze)

    p_verify = sub.add_parser("verify", help="analyze plus character-sum verification")
    add_common(p_verify)
    p_verify.add_argument("--budget", type=int, help="torus evaluation budget")

    p_scan = sub.add_parser("scan", help="stability verdict over a prime range")
    add_common(p_scan)
    p_scan.add_argument("--pmin", type=int, required=True)
    p_scan.add_argument("--pmax", type=int, required=True)
    p_scan.add_argument("--plot", help="also render a PNG gap chart to this path")

    p_emit = sub.add_parser("emit", help="write polygon data or figures to a file")
    add_common(p_emit)
    p_emit.add_argument("--what", choices=["hp", "np", "both"], required=True)
    p_emit.add_argument("--format", choices=["tsv", "svg", "png"], required=True)
    p_emit.add_argument("--out", required=True, help="output path")

    return parser


def _read_document(path: str) -> dict:
    if path == "-":
        return rpt.parse_document(sys.stdin.read())
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return rpt.parse_document(handle.read())
    except OSError as exc:
        raise InvalidInstanceError(f"cannot read {path}: {exc}") from exc


def _env_budget() -> int | None:
    raw = os.environ.get(_BUDGET_ENV)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError as exc:
        raise InvalidInstanceError(f"{_BUDGET_ENV}={raw!r} is not an integer") from exc
    if value < 1:
        raise InvalidInstanceError(f"{_BUDGET_ENV} must be positive")
    return value


def _emit_report(report: dict, text: str, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
    else:
        sys.stdout.write(text)


def _cmd_analyze(args) -> int:
    instance = rpt.parse_instance(_read_document(args.file))
    report = rpt.analyze_report(instance)
    _emit_report(report, rpt.render_analyze_text(report), args.json)
    return EXIT_OK


def _cmd_verify(args) -> int:
    instance = rpt.parse_instance(_read_document(args.file))
    budget = rpt.resolve_budget(instance.budget, args.budget, _env_budget())
    report, code = rpt.verify_report(instance, budget)
    _emit_report(report, rpt.render_verify_text(report), args.json)
    return code


def _cmd_scan(args) -> int:
    doc = _read_document(args.file)
    matrix = ExponentMatrix(rpt.parse_matrix(doc))
    if args.pmin > args.pmax:
        raise InvalidInstanceError("--pmin must not exceed --pmax")
    rows = rpt.scan_rows(matrix, args.pmin, args.pmax)
    if args.json:
        payload = {
            "matrix": [list(r) for r in matrix.rows],
            "pmin": args.pmin,
            "pmax": args.pmax,
            "rows": rows,
        }
        print(json.dumps(payload, indent=2))
    else:
        sys.stdout.write(rpt.render_scan_tsv(rows))
    if args.plot:
        try:
            render.scan_png(rows, args.plot)
        except OSError as exc:
            print(f"error: cannot write {args.plot}: {exc}", file=sys.stderr)
            return 1
    return EXIT_OK


def _cmd_emit(args) -> int:
    doc = _read_document(args.file)
    matrix = ExponentMatrix(rpt.parse_matrix(doc))
    polygons = []
    if args.what in ("hp", "both"):
        polygons.append(("hp", hodge_polygon(matrix)))
    if args.what in ("np", "both"):
        instance = rpt.parse_instance(doc)  # the Newton side needs the prime
        polygons.append(("np", newton_polygon_from_orbits(instance.context())))

    try:
        if args.format == "tsv":
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(render.polygon_tsv(polygons))
        elif args.format == "svg":
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(render.polygon_svg(polygons))
        else:
            render.polygon_png(polygons, args.out)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    return EXIT_OK


_HANDLERS = {
    "analyze": _cmd_analyze,
    "verify": _cmd_verify,
    "scan": _cmd_scan,
    "emit": _cmd_emit,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    started = time.monotonic()
    try:
        code = _HANDLERS[args.command](args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NewtonForgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(f"# elapsed {time.monotonic() - started:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
