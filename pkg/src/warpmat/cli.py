"""Command-line interface: every library operation in scriptable form.

Exit codes: 0 success, 1 domain error (bad codes, broken matrices,
unsatisfiable puzzles), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import puzzle as pz
from .diagrams import (
    KnotProjection,
    format_gauss_code,
    parse_gauss_code,
    reference_diagram,
)
from .matrices import (
    MatrixKind,
    WarpingMatrix,
    build_diagram_matrix,
    build_projection_matrix,
    build_signed_matrix,
    canonical_form,
    matrix_from_text,
    matrix_json_dumps,
    matrix_to_json,
    matrix_to_text,
    reconstruct_diagram,
    reconstruct_projection,
    verify_rules,
)


def _read_source(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _read_code(arg: str) -> str:
    return sys.stdin.read().strip() if arg == "-" else arg


def _parse_rules(text: str) -> tuple[str, ...]:
    return tuple(part.strip() for part in text.split(",") if part.strip())


def _load_matrix(args) -> WarpingMatrix:
    kind = MatrixKind(args.kind) if args.kind else None
    return matrix_from_text(_read_source(args.file), kind)


def _emit_matrix(matrix: WarpingMatrix, fmt: str):
    if fmt == "json":
        sys.stdout.write(matrix_json_dumps(matrix))
    else:
        sys.stdout.write(matrix_to_text(matrix))


def _emit_grid(grid: pz.PuzzleGrid, fmt: str):
    if fmt == "json":
        sys.stdout.write(json.dumps(pz.grid_to_json(grid), indent=2) + "\n")
    else:
        sys.stdout.write(pz.grid_to_text(grid))


def _cmd_build(args) -> int:
    builder = {
        "matrix": build_projection_matrix,
        "signed-matrix": build_signed_matrix,
        "diagram-matrix": build_diagram_matrix,
    }[args.command]
    _emit_matrix(builder(parse_gauss_code(_read_code(args.code))), args.format)
    return 0


def _cmd_verify(args) -> int:
    report = verify_rules(_load_matrix(args))
    if args.format == "json":
        payload = {
            "all_pass": report.all_pass,
            "rules": [
                {"rule": v.rule, "status": v.status, "witness": v.witness}
                for v in report.verdicts
            ],
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        for v in report.verdicts:
            line = f"rule {v.rule}: {v.status}"
            if v.witness:
                line += f" ({v.witness})"
            print(line)
    return 0 if report.all_pass else 1


def _cmd_reconstruct(args) -> int:
    matrix = _load_matrix(args)
    if matrix.kind is MatrixKind.DIAGRAM:
        result = reconstruct_diagram(matrix)
        code = format_gauss_code(result.diagram)
        undetermined = sorted(result.undetermined_signs)
        if args.format == "json":
            payload = {"gauss_code": code, "undetermined_signs": undetermined}
            sys.stdout.write(json.dumps(payload, indent=2) + "\n")
        else:
            print(code)
            for crossing in undetermined:
                print(f"note: sign of crossing {crossing} undetermined, emitted +", file=sys.stderr)
    else:
        word = reconstruct_projection(matrix).word
        code = format_gauss_code(reference_diagram(KnotProjection(word)))
        if args.format == "json":
            payload = {"gauss_code": code, "word": list(word)}
            sys.stdout.write(json.dumps(payload, indent=2) + "\n")
        else:
            print(code)
            print(
                "note: a projection matrix fixes only the crossing pairing;"
                " emitted a first-visit-over, all-positive representative",
                file=sys.stderr,
            )
    return 0


def _cmd_canon(args) -> int:
    _emit_matrix(canonical_form(_load_matrix(args), args.reflection), args.format)
    return 0


def _cmd_puzzle_new(args) -> int:
    rules = _parse_rules(args.rules)
    if args.knot in pz.PRESET_CODES and args.seed is None:
        grid = pz.load_fixture_grid(args.knot)
    else:
        code = pz.PRESET_CODES.get(args.knot, args.knot)
        generated = pz.generate(
            parse_gauss_code(code),
            rules,
            seed=args.seed or 0,
            target_clues=args.target_clues,
        )
        grid = generated.grid
        if not generated.reached_target and args.target_clues:
            print(
                f"note: could not reach {args.target_clues} clues while keeping the"
                f" completion unique; emitted {grid.filled_count}",
                file=sys.stderr,
            )
    _emit_grid(grid, args.format)
    return 0


def _cmd_puzzle_solve(args) -> int:
    grid = pz.grid_from_text(_read_source(args.file))
    solutions = pz.solve(grid, _parse_rules(args.rules), limit=args.limit)
    if args.format == "json":
        payload = {
            "count": len(solutions),
            "limit": args.limit,
            "solutions": [pz.grid_to_json(s) for s in solutions],
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        for k, solution in enumerate(solutions):
            if k:
                print()
            sys.stdout.write(pz.grid_to_text(solution))
        print(f"{len(solutions)} solution(s), searched up to {args.limit}", file=sys.stderr)
    return 0 if solutions else 1


def _cmd_puzzle_check(args) -> int:
    grid = pz.grid_from_text(_read_source(args.file))
    violations = pz.validate(grid, _parse_rules(args.rules))
    if args.format == "json":
        payload = {
            "full": grid.is_full,
            "violations": [
                {
                    "rule": v.rule,
                    "message": v.message,
                    "cells": [list(cell) for cell in v.cells],
                    "column": v.column,
                }
                for v in violations
            ],
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        if not violations:
            print("no violations")
        for v in violations:
            where = " ".join(f"({r},{c})" for r, c in v.cells)
            print(f"rule {v.rule}: {v.message}" + (f" at {where}" if where else ""))
    return 0 if not violations else 1


def _cmd_enumerate(args) -> int:
    classes = pz.enumerate_matrices(
        args.c, _parse_rules(args.rules), allow_reflection=not args.no_reflection
    )
    if args.format == "json":
        payload = {
            "count": len(classes),
            "classes": [matrix_to_json(m) for m in classes],
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        print(f"{len(classes)} equivalence classes")
        for matrix in classes:
            print()
            sys.stdout.write(matrix_to_text(matrix))
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="warpmat",
        description="Warping matrices of knot diagrams: build, verify, invert, play.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    for name, help_text in (
        ("matrix", "all label sequences over a Gauss code's projection"),
        ("signed-matrix", "as matrix, with bars after negative overpasses"),
        ("diagram-matrix", "signed matrix minus the given diagram's own row"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("code", help="Gauss code like O1+U2+O2+U1+, or - for stdin")
        add_format(p)
        p.set_defaults(handler=_cmd_build)

    p = sub.add_parser("verify", help="check the four warping laws on a matrix file")
    p.add_argument("file", nargs="?", default="-", help="matrix text file, - for stdin")
    p.add_argument("--kind", choices=[k.value for k in MatrixKind], default=None)
    add_format(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("reconstruct", help="matrix file back to a Gauss code")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--kind", choices=[k.value for k in MatrixKind], default=None)
    add_format(p)
    p.set_defaults(handler=_cmd_reconstruct)

    p = sub.add_parser("canon", help="canonical form under row swaps and column shifts")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--kind", choices=[k.value for k in MatrixKind], default=None)
    p.add_argument("--reflection", action="store_true", help="also minimize over column reversal")
    add_format(p)
    p.set_defaults(handler=_cmd_canon)

    puzzle = sub.add_parser("puzzle", help="grid puzzle: new, solve, check")
    psub = puzzle.add_subparsers(dest="puzzle_command", required=True)

    p = psub.add_parser("new", help="generate a uniquely solvable clue grid")
    p.add_argument("--knot", required=True, help="Gauss code or preset (trefoil, figure8)")
    p.add_argument("--rules", default="i,ii")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--target-clues", type=int, default=0)
    add_format(p)
    p.set_defaults(handler=_cmd_puzzle_new)

    p = psub.add_parser("solve", help="complete a grid file")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--rules", default="i,ii")
    p.add_argument("--limit", type=int, default=2)
    add_format(p)
    p.set_defaults(handler=_cmd_puzzle_solve)

    p = psub.add_parser("check", help="report rule violations in a grid file")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--rules", default="i,ii")
    add_format(p)
    p.set_defaults(handler=_cmd_puzzle_check)

    p = sub.add_parser("enumerate", help="all rule-satisfying matrices for small c")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--rules", default="i,ii,iii,iv")
    p.add_argument("--no-reflection", action="store_true")
    add_format(p)
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("serve", help="run the puzzle HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8765)
    p.set_defaults(handler=_cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
