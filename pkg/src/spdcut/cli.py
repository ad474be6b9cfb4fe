"""Command line front end.

Exit codes: 0 success, 2 parse error, 3 not series parallel, 4 oracle
mismatch or internal invariant violation, 5 oracle size bound exceeded.
"""

from __future__ import annotations

import argparse
import random
import statistics
import sys
import time
from pathlib import Path
from typing import Callable, Sequence

from .generate import random_spd
from .intseq import dominates, format_seq, parse_seq, typical_sequence
from .mergedom import MergeContext, merge_dominator, path_values
from .oracle import (
    MAX_ORDER_VERTICES,
    OracleBoundError,
    brute_cutwidth,
    brute_modified_cutwidth,
    brute_weighted_cutwidth,
)
from .spdigraph import (
    CyclicGraphError,
    Digraph,
    GraphFormatError,
    NotSeriesParallelError,
    TerminalError,
    recognize_spd,
    read_graph,
    tree_from_sexpr,
    tree_to_sexpr,
)
from .width import (
    InvariantError,
    cutwidth_of_order,
    modified_cutwidth_of_order,
    spd_cutwidth,
    spd_modified_cutwidth,
    spd_weighted_cutwidth,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_SP = 3
EXIT_MISMATCH = 4
EXIT_BOUND = 5


class CliError(Exception):
    def __init__(self, message: str, code: int) -> None:
        super().__init__(message)
        self.code = code


def _seq(text: str):
    try:
        return parse_seq(text)
    except ValueError as exc:
        raise CliError(f"cannot parse sequence {text!r}: {exc}", EXIT_PARSE) from exc


def _graph(path: str) -> Digraph:
    try:
        return read_graph(path)
    except (OSError, GraphFormatError, ValueError) as exc:
        raise CliError(f"cannot read graph {path}: {exc}", EXIT_PARSE) from exc


def _tree(path: str | None):
    if path is None:
        return None
    try:
        return tree_from_sexpr(Path(path).read_text(encoding="utf-8"))
    except (OSError, GraphFormatError) as exc:
        raise CliError(f"cannot read tree {path}: {exc}", EXIT_PARSE) from exc


def cmd_typseq(args, out) -> int:
    view = typical_sequence(_seq(args.seq))
    print(f"values {format_seq(view.values)}", file=out)
    print(f"indices {format_seq(view.source_indices)}", file=out)
    return EXIT_OK


def cmd_dominates(args, out) -> int:
    print("true" if dominates(_seq(args.a), _seq(args.b)) else "false", file=out)
    return EXIT_OK


def cmd_merge_dominator(args, out) -> int:
    r, c = _seq(args.a), _seq(args.b)
    p = merge_dominator(r, c)
    print(format_seq(path_values(MergeContext(r, c), p)), file=out)
    print(str(p), file=out)
    return EXIT_OK


def cmd_recognize(args, out) -> int:
    g = _graph(args.file)
    try:
        tree = recognize_spd(g)
    except (NotSeriesParallelError, CyclicGraphError, TerminalError):
        print("not-series-parallel", file=out)
        return EXIT_NOT_SP
    print(tree_to_sexpr(tree), file=out)
    return EXIT_OK


def _solver_command(solver: Callable) -> Callable:
    def run(args, out) -> int:
        g = _graph(args.file)
        tree = _tree(args.tree)
        try:
            value, order = solver(g, tree)
        except (NotSeriesParallelError, CyclicGraphError, TerminalError) as exc:
            print("not-series-parallel", file=out)
            print(str(exc), file=sys.stderr)
            return EXIT_NOT_SP
        except ValueError as exc:
            raise CliError(f"tree does not match graph: {exc}", EXIT_PARSE) from exc
        print(f"value {value}", file=out)
        print("order " + " ".join(str(v) for v in order), file=out)
        return EXIT_OK

    return run


def cmd_verify(args, out) -> int:
    g = _graph(args.file)
    checks = [
        ("cutwidth", spd_cutwidth, brute_cutwidth, lambda o: cutwidth_of_order(g.with_unit_weights(), o)),
        ("weighted-cutwidth", spd_weighted_cutwidth, brute_weighted_cutwidth, lambda o: cutwidth_of_order(g, o)),
        ("modified-cutwidth", spd_modified_cutwidth, brute_modified_cutwidth, lambda o: modified_cutwidth_of_order(g, o)),
    ]
    if g.n > args.max_vertices:
        print(f"oracle bound exceeded: {g.n} > {args.max_vertices} vertices", file=out)
        return EXIT_BOUND
    status = EXIT_OK
    for name, solver, oracle, certify in checks:
        try:
            value, order = solver(g, None, True)
        except (NotSeriesParallelError, CyclicGraphError, TerminalError):
            print("not-series-parallel", file=out)
            return EXIT_NOT_SP
        except InvariantError as exc:
            print(f"{name} MISMATCH invariant: {exc}", file=out)
            status = EXIT_MISMATCH
            continue
        try:
            expected, _ = oracle(g, args.max_vertices)
        except OracleBoundError as exc:
            print(f"oracle bound exceeded: {exc}", file=out)
            return EXIT_BOUND
        ok = value == expected and certify(order) == value
        print(f"{name} {value} {expected} {'match' if ok else 'MISMATCH'}", file=out)
        if not ok:
            status = EXIT_MISMATCH
    return status


_ORACLES = {
    "cutwidth": brute_cutwidth,
    "weighted-cutwidth": brute_weighted_cutwidth,
    "modified-cutwidth": brute_modified_cutwidth,
}


def cmd_oracle(args, out) -> int:
    g = _graph(args.file)
    try:
        value, order = _ORACLES[args.measure](g, args.max_vertices)
    except OracleBoundError as exc:
        print(f"oracle bound exceeded: {exc}", file=out)
        return EXIT_BOUND
    except CyclicGraphError:
        print("not-series-parallel", file=out)
        return EXIT_NOT_SP
    print(f"value {value}", file=out)
    print("order " + " ".join(str(v) for v in order), file=out)
    return EXIT_OK


def _timing_row(label: str, samples: Sequence[float]) -> str:
    return f"{label:>12} {min(samples):10.4f} {statistics.median(samples):10.4f} {max(samples):10.4f}"


def cmd_bench(args, out) -> int:
    rng = random.Random(args.seed)
    print(f"{'size':>12} {'min_s':>10} {'median_s':>10} {'max_s':>10}", file=out)
    if args.target == "merge-dominator":
        sizes = args.len or [10**5, 10**6]
        for n in sizes:
            samples = []
            for _ in range(args.trials):
                r = tuple(rng.randint(-10**6, 10**6) for _ in range(n))
                c = tuple(rng.randint(-10**6, 10**6) for _ in range(n))
                t0 = time.perf_counter()
                merge_dominator(r, c)
                samples.append(time.perf_counter() - t0)
            print(_timing_row(str(n), samples), file=out)
    else:
        sizes = args.leaves or [1000, 4000]
        for k in sizes:
            samples = []
            n_vertices = 0
            for _ in range(args.trials):
                g, tree = random_spd(k, rng)
                n_vertices = g.n
                t0 = time.perf_counter()
                spd_cutwidth(g, tree)
                samples.append(time.perf_counter() - t0)
            print(_timing_row(f"{k}L/{n_vertices}V", samples), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spdcut", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("typseq", help="typical sequence and its source indices")
    p.add_argument("seq")
    p.set_defaults(func=cmd_typseq)

    p = sub.add_parser("dominates", help="does the first sequence dominate the second")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_dominates)

    p = sub.add_parser("merge-dominator", help="dominating non-diagonal merge")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_merge_dominator)

    p = sub.add_parser("recognize", help="decomposition tree as an s-expression")
    p.add_argument("file")
    p.set_defaults(func=cmd_recognize)

    for name, solver in (
        ("cutwidth", spd_cutwidth),
        ("weighted-cutwidth", spd_weighted_cutwidth),
        ("modified-cutwidth", spd_modified_cutwidth),
    ):
        p = sub.add_parser(name, help=f"{name.replace('-', ' ')} of a series parallel digraph")
        p.add_argument("file")
        p.add_argument("--tree", help="decomposition tree s-expression file (recognised if omitted)")
        p.set_defaults(func=_solver_command(solver))

    p = sub.add_parser("verify", help="compare all solvers with the brute-force oracle")
    p.add_argument("file")
    p.add_argument("--max-vertices", type=int, default=MAX_ORDER_VERTICES)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive optimum over all topological orders")
    p.add_argument("measure", choices=sorted(_ORACLES))
    p.add_argument("file")
    p.add_argument("--max-vertices", type=int, default=MAX_ORDER_VERTICES)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="timing tables")
    p.add_argument("target", choices=["merge-dominator", "cutwidth"])
    p.add_argument("--len", type=int, action="append", help="sequence length (repeatable)")
    p.add_argument("--leaves", type=int, action="append", help="tree leaf count (repeatable)")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
