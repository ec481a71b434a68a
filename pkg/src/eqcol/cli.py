"""``eqcol`` command line: solve, sweep, verify, gen-kneser.

Exit codes: 0 success, 1 usage error, 2 I/O or parse error, 3 verification
failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import bench
from .driver import SHORT_ITERATION_CAP
from .graph import DimacsError, generate_kneser, read_dimacs, to_dimacs
from .partition import EquityError, format_coloring, read_coloring, verify_eqcol
from .tabu import DEFAULT_ALPHA, DEFAULT_BETA, TenureParams

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _float_list(text):
    return [float(x) for x in text.split(",") if x]


def _int_list(text):
    return [int(x) for x in text.split(",") if x]


def build_parser():
    p = _Parser(prog="eqcol", description="Tabu search for equitable graph coloring.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def search_flags(sp):
        sp.add_argument("--alpha", type=float, default=DEFAULT_ALPHA)
        sp.add_argument("--beta", type=int, default=DEFAULT_BETA)
        sp.add_argument("--time", type=float, default=None,
                        help=f"wall-clock budget in seconds (default {bench.DEFAULT_TIME:g})")
        sp.add_argument("--quick", action="store_true",
                        help=f"use a {bench.QUICK_TIME:g} s budget and, unless --iters is "
                             f"given, a {SHORT_ITERATION_CAP} iteration cap per search")
        sp.add_argument("--iters", type=int, default=None,
                        help="iteration cap per tabu search")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--csv", type=Path, help="append result rows to this CSV file")
        sp.add_argument("--no-timing", action="store_true",
                        help="leave the seconds column empty so rows are reproducible")

    sp = sub.add_parser("solve", help="solve one instance")
    sp.add_argument("--in", dest="input", type=Path, required=True)
    sp.add_argument("--lb", type=int, default=1, help="known lower bound (default 1)")
    sp.add_argument("--k", type=int, help="search a single fixed k instead of descending")
    sp.add_argument("--restarts", type=int, default=None,
                    help="fresh starts allowed after a failed search at one k "
                         "(default: until the time budget is used up)")
    search_flags(sp)
    sp.add_argument("--out", type=Path, help="write the coloring here")

    sw = sub.add_parser("sweep", help="fixed-k runs over an (alpha, beta) grid")
    sw.add_argument("--instances", type=Path, required=True,
                    help="file with lines '<col file> <k> [<lb>]'")
    sw.add_argument("--alphas", type=_float_list, default=[0.3, 0.6, 0.9])
    sw.add_argument("--betas", type=_int_list, default=[5, 10, 15])
    search_flags(sw)
    sw.add_argument("--out", type=Path, help="write the rendered table here")

    vf = sub.add_parser("verify", help="check a coloring file")
    vf.add_argument("--in", dest="input", type=Path, required=True)
    vf.add_argument("--coloring", type=Path, required=True)

    gk = sub.add_parser("gen-kneser", help="write a Kneser graph in DIMACS format")
    gk.add_argument("--a", type=int, required=True)
    gk.add_argument("--b", type=int, required=True)
    gk.add_argument("--out", type=Path)
    return p


def _budget(args):
    if args.quick and args.time is not None:
        raise UsageError("--quick and --time are mutually exclusive")
    limit = bench.QUICK_TIME if args.quick else args.time
    if limit is None:
        limit = bench.DEFAULT_TIME
    if limit <= 0:
        raise UsageError("--time must be positive")
    if args.iters is not None and args.iters < 0:
        raise UsageError("--iters must be nonnegative")
    if args.quick and args.iters is None:
        args.iters = SHORT_ITERATION_CAP
    try:
        params = TenureParams(args.alpha, args.beta)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return limit, params


def cmd_solve(args):
    limit, params = _budget(args)
    graph = read_dimacs(args.input)
    if not 1 <= args.lb <= graph.n:
        raise UsageError(f"--lb must lie in 1..{graph.n}")
    if args.k is not None and not 1 <= args.k <= graph.n:
        raise UsageError(f"--k must lie in 1..{graph.n}")
    if args.restarts is not None and args.restarts < 0:
        raise UsageError("--restarts must be nonnegative")
    rec, coloring = bench.run_instance(graph, lb=args.lb, k=args.k, params=params,
                                       time_limit=limit, iterations=args.iters, seed=args.seed,
                                       restarts=args.restarts)
    timing = not args.no_timing
    sys.stdout.write(bench.csv_text([rec], timing=timing))
    if args.out:
        args.out.write_text(format_coloring(coloring))
    if args.csv:
        bench.append_csv(args.csv, [rec], timing=timing)
    return EXIT_OK


def cmd_sweep(args):
    limit, _ = _budget(args)
    if not args.alphas or not args.betas:
        raise UsageError("--alphas and --betas must be nonempty")
    entries = bench.read_instance_list(args.instances)
    try:
        table = bench.run_sweep(entries, args.alphas, args.betas, limit, args.iters, args.seed)
    except bench.SweepAborted as exc:
        sys.stderr.write(f"eqcol: sweep aborted: {exc}\n")
        if any(exc.table.cells):
            sys.stderr.write("completed cells:\n" + bench.csv_text(exc.table.records()))
        return EXIT_IO
    text = table.render()
    sys.stdout.write(text)
    if args.out:
        args.out.write_text(text)
    if args.csv:
        bench.append_csv(args.csv, table.records(), timing=not args.no_timing)
    return EXIT_OK


def cmd_verify(args):
    graph = read_dimacs(args.input)
    try:
        s = read_coloring(args.coloring, graph)
    except EquityError as exc:
        print(f"NOT an equitable coloring: {exc}")
        return EXIT_VERIFY
    if verify_eqcol(graph, s):
        print(f"ok: equitable {s.k}-coloring")
        return EXIT_OK
    print(f"NOT a proper coloring: {s.objective} conflicting edge(s)")
    return EXIT_VERIFY


def cmd_gen_kneser(args):
    try:
        g = generate_kneser(args.a, args.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = f"c Kneser graph K({args.a},{args.b})\n" + to_dimacs(g)
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


COMMANDS = {"solve": cmd_solve, "sweep": cmd_sweep, "verify": cmd_verify,
            "gen-kneser": cmd_gen_kneser}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"eqcol: {exc}\n")
        return EXIT_USAGE
    except (OSError, DimacsError, ValueError) as exc:
        sys.stderr.write(f"eqcol: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
