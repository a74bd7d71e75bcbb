"""Command-line entry point: ``symmetra symmetries|similar|chain|assoc``."""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

import mpmath

from .bipoly import BiPoly
from .errors import InternalAssertionError, SymmetraError
from .harmonic import associated_g
from .numeric import GaussRat
from .parse import parse_poly
from .reduce import chain
from .render import render_svg
from .report import emit_report
from .reports import SimilarityReport, SimilarityStatus, SymmetryReport, unit_angle
from .similarity import similarities
from .symmetry import symmetries
from .verify import DEFAULT_PRECISION_BITS, map_beta_value, set_precision_bits

EXIT_OK, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2
PRECISION_ENV = "SYMMETRA_PRECISION_BITS"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _read_expr(arg: str) -> BiPoly:
    if arg.startswith("@"):
        text = Path(arg[1:]).read_text(encoding="utf-8")
    else:
        text = arg
    return parse_poly(text.strip())


def _window(text: str) -> tuple[float, float, float, float]:
    try:
        parts = tuple(float(p) for p in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad window {text!r}") from exc
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("window needs four numbers x0,y0,x1,y1")
    return parts


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="symmetra", description="Exact symmetries and similarities of implicit plane curves.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("symmetries", help="symmetry group of one curve")
    s.add_argument("expr", help="polynomial in x, y, or @file")
    s.add_argument("--json", action="store_true", help="print the JSON report")
    s.add_argument("--svg", metavar="OUT", help="write an SVG picture")
    s.add_argument("--window", type=_window, default=(-3.0, -3.0, 3.0, 3.0), metavar="x0,y0,x1,y1")
    s.add_argument("--max-order", type=int, default=None, metavar="N", help="largest rotation order tried")

    m = sub.add_parser("similar", help="similarities between two curves")
    m.add_argument("expr1")
    m.add_argument("expr2")
    m.add_argument("--json", action="store_true")
    m.add_argument("--svg", metavar="OUT")
    m.add_argument("--window", type=_window, default=(-3.0, -3.0, 3.0, 3.0), metavar="x0,y0,x1,y1")

    c = sub.add_parser("chain", help="print the Laplacian chain")
    c.add_argument("expr")

    a = sub.add_parser("assoc", help="print g(z) = h_x - i h_y of a harmonic polynomial")
    a.add_argument("expr")
    return p


def _describe_symmetries(r: SymmetryReport) -> str:
    if r.family is not None:
        return f"infinite symmetry group: {r.family.describe()}"
    if r.is_trivial:
        return "no symmetries found"
    lines = [f"center: {r.center}", f"group order: {r.group_order}"]
    for rot in r.rotations:
        lines.append(f"rotation of order {rot.order} (lambda = {rot.lam:+d})")
    for ref in r.reflections:
        ang = float(unit_angle(ref.unit, 15))
        lines.append(f"reflection, axis angle ~{ang:.12f} rad, w = {ref.unit} (lambda = {ref.lam:+d})")
    lines += [f"warning: {w}" for w in r.warnings]
    return "\n".join(lines)


def _approx(z) -> str:
    return f"~{mpmath.nstr(z, 15)}"


def _describe_similarities(r: SimilarityReport) -> str:
    if r.status is not SimilarityStatus.SIMILAR:
        return f"{r.status.value}: {r.description}"
    lines = [f"similar: {len(r.similarities)} map(s)"]
    for e in r.similarities:
        alpha = e.map.alpha if e.map.is_exact else _approx(e.map.alpha.approx(20))
        beta = map_beta_value(e.map)
        if not isinstance(beta, GaussRat):
            beta = _approx(beta.to_mpc())
        var = "z" if e.map.is_direct else "conj(z)"
        lines.append(f"z -> ({alpha})*{var} + ({beta})   lambda = {e.lam}, mu^2 = {e.mu2}")
    return "\n".join(lines)


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_symmetries(args) -> int:
    f = _read_expr(args.expr)
    report = symmetries(f, max_order=args.max_order)
    _emit(emit_report(report) if args.json else _describe_symmetries(report))
    if args.svg:
        Path(args.svg).write_text(render_svg(f, report, args.window), encoding="utf-8")
    return EXIT_OK


def _cmd_similar(args) -> int:
    f1, f2 = _read_expr(args.expr1), _read_expr(args.expr2)
    report = similarities(f1, f2)
    _emit(emit_report(report) if args.json else _describe_similarities(report))
    if args.svg:
        Path(args.svg).write_text(render_svg(f1, None, args.window, others=[f2]), encoding="utf-8")
    return EXIT_OK


def _cmd_chain(args) -> int:
    ch = chain(_read_expr(args.expr))
    for k, stage in enumerate(ch.stages):
        print(f"L^{k} f = {stage}")
    print(f"L^{ch.ell + 1} f = {ch.terminal_constant}")
    print(f"ell = {ch.ell}")
    return EXIT_OK


def _cmd_assoc(args) -> int:
    print(f"g(z) = {associated_g(_read_expr(args.expr))}")
    return EXIT_OK


_COMMANDS = {"symmetries": _cmd_symmetries, "similar": _cmd_similar, "chain": _cmd_chain, "assoc": _cmd_assoc}


def _configure_precision() -> None:
    raw = os.environ.get(PRECISION_ENV)
    if raw is None:
        set_precision_bits(DEFAULT_PRECISION_BITS)
        return
    try:
        set_precision_bits(int(raw))
    except ValueError as exc:
        raise _UsageError(f"{PRECISION_ENV} must be an integer >= 64, got {raw!r}") from exc


def _join_window(argv: Sequence[str]) -> list[str]:
    # "--window -2,-2,2,2" would otherwise be read as an unknown option
    out, items = [], iter(argv)
    for a in items:
        if a == "--window":
            out.append(f"--window={next(items, '')}")
        else:
            out.append(a)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    try:
        _configure_precision()
        args = parser.parse_args(_join_window(sys.argv[1:] if argv is None else argv))
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalAssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (SymmetraError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
