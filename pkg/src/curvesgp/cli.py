"""Command line interface.

Exit codes: 0 success, 1 domain error (the error class is named in the
message), 2 parse error, 3 growth-guard tripped.
"""

from __future__ import annotations

import argparse
import json
import sys

from .deformation import deform_from_basis
from .globalbasis import global_basis, reduce_degree, reduced_basis_global
from .localbasis import local_basis, reduce_order, reduced_basis
from .mpoly import render_mpoly
from .numsgp import NumSgp
from .parsing import ParseError, parse_mpoly, parse_poly, parse_poly_list
from .planebranch import (
    conductor_formula,
    gamma_at_infinity,
    gamma_curve_infinity,
    gamma_local_pair,
    plane_local,
)
from .poly import render_poly
from .reduction import BasisElement, LimitExceeded
from . import report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvesgp",
        description="Semigroups of values of curve subalgebras, bases, "
                    "and deformations to monomial curves.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, char=True):
        if char:
            p.add_argument("--char", type=int, default=0,
                           help="field characteristic (0 or a prime)")
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("local", help="basis and order semigroup of K[[f1,...,fs]]")
    p.add_argument("polys", help="comma-separated polynomials in x (or t)")
    p.add_argument("--show", choices=["semigroup", "basis", "reduced", "all"],
                   default="semigroup")
    add_common(p)

    p = sub.add_parser("global", help="basis and degree semigroup of K[f1,...,fs]")
    p.add_argument("polys")
    p.add_argument("--show", choices=["semigroup", "basis", "reduced", "all"],
                   default="semigroup")
    add_common(p)

    p = sub.add_parser("plane-local", help="two-generator local pipeline")
    p.add_argument("f")
    p.add_argument("g")
    add_common(p)

    p = sub.add_parser("plane-infinity", help="two-generator pipeline at infinity")
    p.add_argument("f")
    p.add_argument("g")
    add_common(p)

    p = sub.add_parser("curve-infinity",
                       help="semigroup of a plane curve with one place at infinity")
    p.add_argument("curve", help="polynomial in x and y")
    add_common(p)

    p = sub.add_parser("deform", help="deformation data of a computed basis")
    p.add_argument("setting", choices=["local", "global"])
    p.add_argument("polys")
    add_common(p)

    p = sub.add_parser("reduce", help="divide a polynomial by a basis")
    p.add_argument("setting", choices=["local", "global"])
    p.add_argument("poly")
    p.add_argument("--against", required=True,
                   help="comma-separated basis polynomials")
    p.add_argument("--mode", choices=["algorithmic", "expression"],
                   default="algorithmic")
    p.add_argument("--bound", type=int, default=None)
    add_common(p)

    p = sub.add_parser("semigroup", help="numerical semigroup facts")
    p.add_argument("generators", help="comma-separated positive integers")
    add_common(p, char=False)
    return parser


def _require_char_zero(args):
    if getattr(args, "char", 0) != 0:
        raise ValueError("plane-branch commands need characteristic zero")


def _emit(args, rep: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(rep, indent=2))
    else:
        print("\n".join(lines))


def _basis_command(args, setting: str) -> None:
    gens = parse_poly_list(args.polys, args.char)
    basis = local_basis(gens) if setting == "local" else global_basis(gens)
    rep = {"command": setting, "semigroup": report.semigroup_report(basis.semigroup)}
    lines = report.semigroup_lines(basis.semigroup)
    if args.show in ("basis", "all"):
        rep["basis"] = report.basis_report(basis)
        lines += report.basis_lines(basis, "basis")
    if args.show in ("reduced", "all"):
        reduced = (reduced_basis(basis) if setting == "local"
                   else reduced_basis_global(basis))
        rep["reduced_basis"] = report.basis_report(reduced)
        lines += report.basis_lines(reduced, "reduced basis")
    if args.show == "all":
        rep["presentation"] = report.presentation_report(basis.presentation)
        lines.append(f"presentation pairs: {len(basis.presentation.pairs)}")
    _emit(args, rep, lines)


def _plane_report(args, result, setting: str) -> None:
    S = result.semigroup
    seq = result.sequence
    rep = {
        "command": f"plane-{setting}",
        "semigroup": report.semigroup_report(S),
        "char_sequence": report.char_sequence_report(seq, conductor_formula(seq)),
        "roots": [render_mpoly(g) for g in result.roots],
        "curve": render_mpoly(result.curve),
    }
    lines = [f"F(x,y) = {rep['curve']}"]
    lines += report.semigroup_lines(S)
    lines.append(f"r sequence: {list(seq.r)}   d: {list(seq.d)}   e: {list(seq.e)}")
    lines.append(f"conductor formula: {conductor_formula(seq)}")
    if result.roots:
        lines.append("approximate roots: "
                     + ", ".join(render_mpoly(g) for g in result.roots))
    if result.evaluated:
        rep["evaluated"] = [report.poly_entry(p) for p in result.evaluated]
        lines.append("evaluated roots: "
                     + ", ".join(render_poly(p, "x") for p in result.evaluated))
    _emit(args, rep, lines)


def run(argv: list[str]) -> int:
    args = build_parser().parse_args(argv)
    cmd = args.command

    if cmd in ("local", "global"):
        _basis_command(args, cmd)

    elif cmd == "plane-local":
        _require_char_zero(args)
        f = parse_poly(args.f)
        g = parse_poly(args.g)
        if len(f.support) == 1 and f.order < g.order:
            result = plane_local(f.monic_trailing()[0], g)
            _plane_report(args, result, "local")
        else:
            S, seq = gamma_local_pair(f, g)
            rep = {"command": "plane-local",
                   "semigroup": report.semigroup_report(S),
                   "char_sequence": report.char_sequence_report(
                       seq, conductor_formula(seq))}
            lines = report.semigroup_lines(S)
            lines.append(f"r sequence: {list(seq.r)}   d: {list(seq.d)}   "
                         f"e: {list(seq.e)}")
            _emit(args, rep, lines)

    elif cmd == "plane-infinity":
        _require_char_zero(args)
        result = gamma_at_infinity(parse_poly(args.f), parse_poly(args.g))
        _plane_report(args, result, "infinity")

    elif cmd == "curve-infinity":
        _require_char_zero(args)
        F = parse_mpoly(args.curve, ("x", "y"))
        result = gamma_curve_infinity(F)
        _plane_report(args, result, "curve")

    elif cmd == "deform":
        gens = parse_poly_list(args.polys, args.char)
        basis = local_basis(gens) if args.setting == "local" else global_basis(gens)
        ds = deform_from_basis(basis)
        rep = {"command": "deform",
               "semigroup": report.semigroup_report(basis.semigroup),
               "deformation": report.deformation_report(ds)}
        lines = report.semigroup_lines(basis.semigroup)
        lines += report.deformation_lines(ds)
        _emit(args, rep, lines)

    elif cmd == "reduce":
        f = parse_poly(args.poly, args.char)
        gens = parse_poly_list(args.against, args.char)
        if args.setting == "local":
            elems = [BasisElement(p.monic_trailing()[0], int(p.order))
                     for p in gens]
            out = reduce_order(f, elems, args.mode, args.bound)
        else:
            elems = [BasisElement(p.monic_leading()[0], int(p.degree))
                     for p in gens]
            out = reduce_degree(f, elems, args.mode)
        rep = {"command": "reduce",
               "reduction": report.reduction_report(out, f.field)}
        lines = [f"remainder: {render_poly(out.remainder, 'x')}",
                 f"complete: {out.complete}   "
                 f"shortcut: {out.consumed_conductor_shortcut}",
                 f"expression terms: {len(out.expression)}"]
        _emit(args, rep, lines)

    elif cmd == "semigroup":
        try:
            gens = [int(t) for t in args.generators.split(",") if t.strip()]
        except ValueError:
            raise ParseError("generators must be integers", 0) from None
        S = NumSgp(gens)
        rep = {"command": "semigroup", "semigroup": report.semigroup_report(S)}
        if S.is_numerical:
            rep["presentation"] = report.presentation_report(
                S.minimal_presentation())
        _emit(args, rep, report.semigroup_lines(S))

    return 0


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        return run(argv)
    except ParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return 2
    except LimitExceeded as err:
        print(f"error[LimitExceeded]: {err}", file=sys.stderr)
        return 3
    except (ValueError, ZeroDivisionError, ArithmeticError, RuntimeError) as err:
        print(f"error[{type(err).__name__}]: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
