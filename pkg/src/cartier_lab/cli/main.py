"""Command-line entry point ``cartier-lab``.

Exit codes: 0 ok, 1 verification mismatch, 2 usage, 3 input or parse error,
4 internal assertion (BasisDeficient, ImageOutsideSpan, BoundViolation).
"""

import argparse
import json
import sys

from .. import __version__
from ..errors import CartierLabError, InputError
from ..exactalg import check_prime
from . import commands, fixtures
from .parse import CurveSpec
from .report import render_bounds_table, render_records

FORMATS = ("json", "csv", "md")


def _int_list(text):
    try:
        return commands.parse_int_list(text)
    except InputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _point(text):
    if text in ("inf", "infinity", "oo"):
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'inf', got {text!r}") from None


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cartier-lab",
        description="a-numbers, p-ranks and Cartier kernel bounds of y^p - y = f over F_p",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    inv = sub.add_parser("invariants", help="genus, p-rank, a-profile and bounds of one or more curves")
    inv.add_argument("--p", type=int, help="the prime")
    inv.add_argument("--f", help="right-hand side, e.g. 'x^-4 + x^-3'")
    inv.add_argument("--stdin", action="store_true", help="read one curve JSON object per line from stdin")
    inv.add_argument("--n-max", type=int, default=None, help="profile length (default: genus)")
    inv.add_argument("--format", choices=FORMATS, default="json")

    bnd = sub.add_parser("bounds", help="closed-form lower and upper bounds for a ramification datum")
    bnd.add_argument("--p", type=int, required=True)
    bnd.add_argument("--d", type=_int_list, required=True, help="ramification breaks, e.g. 100 or 3,3")
    bnd.add_argument("--n-max", type=int, default=10)
    bnd.add_argument("--g-x", type=int, default=0, help="genus of the base curve")
    bnd.add_argument("--s-x", type=int, default=0, help="p-rank of the base curve")
    bnd.add_argument("--a-x", type=_int_list, default=None, help="a-profile of the base, comma separated")
    bnd.add_argument("--format", choices=FORMATS, default="md")

    swp = sub.add_parser("sweep", help="exact profiles and bounds over a family of curves")
    swp.add_argument("--p", type=_int_list, required=True, help="prime (several allowed with --random)")
    src = swp.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", help="template with {name} fields ranging over F_p")
    src.add_argument("--d", type=_int_list, help="breaks for random single-point curves, e.g. 1-15")
    src.add_argument("--random", type=int, metavar="COUNT", help="random reduced covers")
    src.add_argument("--stdin", action="store_true", help="curve JSON lines from stdin")
    swp.add_argument("--count", type=int, default=1, help="curves per d (with --d)")
    swp.add_argument("--at-infinity", action="store_true", help="with --d: branch at infinity instead of 0")
    swp.add_argument("--total-max", type=int, default=24, help="with --random: bound on the sum of breaks")
    swp.add_argument("--seed", type=int, default=0)
    swp.add_argument("--n-max", type=int, default=None)
    swp.add_argument("--jobs", type=int, default=None, help="worker processes (default: $CARTIER_LAB_JOBS or 1)")
    swp.add_argument("--out", help="write here instead of stdout")
    swp.add_argument("--format", choices=FORMATS, default="csv")
    swp.add_argument("--quiet", action="store_true", help="no work estimate on stderr")

    ver = sub.add_parser("verify-paper", help="check the published reference values")
    ver.add_argument("--only", help="comma separated fixture names")
    ver.add_argument("--list", action="store_true", help="list fixtures and exit")
    ver.set_defaults(subparser=ver)

    nrm = sub.add_parser("normalize", help="Artin-Schreier reduce f, optionally moving a point first")
    nrm.add_argument("--p", type=int, required=True)
    nrm.add_argument("--f", required=True)
    nrm.add_argument("--move", type=_point, metavar="POINT", help="point of P^1(F_p) to move ('inf' allowed)")
    nrm.add_argument("--to", type=_point, default=None, metavar="TARGET", help="0 or inf (default inf)")
    return parser


def _run_invariants(args, parser, out):
    if args.stdin:
        specs = commands.read_curve_lines(sys.stdin)
    else:
        if args.p is None or args.f is None:
            parser.error("invariants needs --p and --f, or --stdin")
        specs = [CurveSpec(args.p, args.f)]
    records = [commands.cmd_invariants(s, args.n_max).to_dict() for s in specs]
    out.write(render_records(records, args.format))
    commands.check_sandwich(records)
    return 0


def _run_bounds(args, out):
    table = commands.cmd_bounds(args.p, args.d, args.n_max, args.g_x, args.s_x, args.a_x)
    out.write(render_bounds_table(table, args.format))
    return 0


def _run_sweep(args, out):
    p_list = args.p
    if not p_list:
        raise InputError("--p is empty")
    for p in p_list:
        check_prime(p)
    if args.stdin:
        specs = commands.read_curve_lines(sys.stdin)
        ps = [s.p for s in specs]
        sources = [s.f_source if isinstance(s.f_source, str) else s.label() for s in specs]
    else:
        if len(p_list) > 1 and args.random is None:
            raise InputError("several primes are only allowed with --random")
        if args.family is not None:
            sources = commands.family_curves(p_list[0], args.family)
            ps = [p_list[0]] * len(sources)
        elif args.d is not None:
            sources = commands.single_pole_curves(p_list[0], args.d, args.count, args.seed, args.at_infinity)
            ps = [p_list[0]] * len(sources)
        else:
            from ..corpus import random_corpus
            from .parse import print_f

            corpus = random_corpus(args.seed, args.random, tuple(p_list), args.total_max)
            ps = [p for p, _ in corpus]
            sources = [print_f(f) for _, f in corpus]
    jobs = args.jobs if args.jobs is not None else commands.default_jobs()
    rows = commands.cmd_sweep(ps, sources, args.n_max, jobs, None if args.quiet else sys.stderr)
    text = commands.render_sweep(rows, args.format)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def _run_verify(args, parser, out):
    if args.list:
        for fx in fixtures.FIXTURES:
            out.write(f"{fx.name:<12}  {fx.description}\n")
        return 0
    names = None
    if args.only:
        names = [n.strip() for n in args.only.split(",") if n.strip()]
        unknown = [n for n in names if n not in fixtures.NAMES]
        if unknown:
            parser.error(f"unknown fixture(s) {', '.join(unknown)}; choose from {', '.join(fixtures.NAMES)}")
    failed = 0
    for fx, ok, expected, got, seconds in fixtures.run_fixtures(names):
        out.write(f"{'PASS' if ok else 'FAIL'}  {fx.name:<12} {seconds:7.2f}s  {fx.description}\n")
        if not ok:
            failed += 1
            for key in expected:
                if expected[key] != got.get(key):
                    out.write(f"      {key}: expected {expected[key]!r}\n")
                    out.write(f"      {key}: got      {got.get(key)!r}\n")
    out.write(f"{'all fixtures pass' if not failed else f'{failed} fixture(s) failed'}\n")
    return 1 if failed else 0


def _run_normalize(args, out):
    target = args.to if args.move is not None else None
    result = commands.cmd_normalize(args.p, args.f, args.move, target)
    out.write(json.dumps(result) + "\n")
    return 0


def _provenance(exc):
    tb = exc.__traceback__
    module = None
    while tb is not None:
        name = tb.tb_frame.f_globals.get("__name__", "")
        if name.startswith("cartier_lab"):
            module = name
        tb = tb.tb_next
    return module or "cartier_lab"


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "invariants":
            return _run_invariants(args, parser, out)
        if args.command == "bounds":
            return _run_bounds(args, out)
        if args.command == "sweep":
            return _run_sweep(args, out)
        if args.command == "verify-paper":
            return _run_verify(args, args.subparser, out)
        return _run_normalize(args, out)
    except CartierLabError as exc:
        sys.stderr.write(f"error [{_provenance(exc)}] {type(exc).__name__}: {exc}\n")
        return exc.exit_code

