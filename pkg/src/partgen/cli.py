"""Command-line interface.

Subcommands: ``gen`` (stream compositions), ``count`` (exact counts),
``verify`` (invariant suite), ``instrument`` (operation counts and tape
dumps), ``bench`` (wall-clock ratio measurements).

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain
or capacity error.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import counting
from .analysis import Pair
from .bench import Sink, bench_pair
from .errors import PartgenError
from .generators import Algorithm, GeneratorSpec, iterate
from .instrument import Mode, attach, tape_to_csv
from .verify import run_suite


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partgen",
        description="Generate, count, instrument and benchmark integer partitions.")
    sub = parser.add_subparsers(dest="command", required=True)

    algo_names = [a.value for a in Algorithm]

    p_gen = sub.add_parser("gen", help="stream one composition per line")
    p_gen.add_argument("--algo", required=True, choices=algo_names)
    p_gen.add_argument("--n", required=True, type=int)
    p_gen.add_argument("--limit", type=int, default=None,
                       help="stop after this many compositions")
    p_gen.add_argument("--sep", default="+", help="part separator (default '+')")

    p_count = sub.add_parser("count", help="print an exact count")
    p_count.add_argument("--n", required=True, type=int)
    p_count.add_argument("--m", type=int, default=None)
    p_count.add_argument("--kind", default="p",
                         choices=["p", "nac", "ndcf", "ntac", "ones"])

    p_verify = sub.add_parser("verify", help="run the cross-verification suite")
    p_verify.add_argument("--max-n", required=True, type=int)

    p_inst = sub.add_parser("instrument", help="operation counts and tapes")
    p_inst.add_argument("--algo", required=True, choices=algo_names)
    p_inst.add_argument("--n", required=True, type=int)
    p_inst.add_argument("--include-init", action="store_true",
                        help="count initialization writes as well")
    p_inst.add_argument("--tape", default=None, metavar="FILE",
                        help="write the read/write tape CSV here ('-' for stdout)")

    p_bench = sub.add_parser("bench", help="asc/desc wall-clock ratio")
    p_bench.add_argument("--pair", required=True, choices=["recursive", "accel"])
    p_bench.add_argument("--n", required=True,
                         help="comma-separated list of n values")
    p_bench.add_argument("--reps", type=int, default=5)
    p_bench.add_argument("--warmup", type=int, default=1)
    p_bench.add_argument("--sink", default="count", choices=["count", "checksum"])
    return parser


def _cmd_gen(args) -> int:
    spec = GeneratorSpec(Algorithm(args.algo), args.n)
    out = sys.stdout
    emitted = 0
    for buf, lo, hi in iterate(spec):
        out.write(args.sep.join(map(str, buf[lo:hi])))
        out.write("\n")
        emitted += 1
        if args.limit is not None and emitted >= args.limit:
            break
    return 0


def _cmd_count(args, parser) -> int:
    if args.kind == "ndcf" and args.m is None:
        parser.error("--kind ndcf requires an explicit --m")
    m = args.m if args.m is not None else 1
    tables = counting.build_tables(max(args.n, 1))
    if args.kind == "p":
        value = tables.p(args.n)
    elif args.kind == "nac":
        value = tables.nac(args.n, m)
    elif args.kind == "ndcf":
        value = tables.ndcf(args.n, m)
    elif args.kind == "ntac":
        value = tables.ntac(args.n, m)
    else:
        value = counting.ones_total(tables, args.n)
    print(value)
    return 0


def _cmd_verify(args) -> int:
    results = run_suite(args.max_n)
    failed = False
    for name, passed, detail in results:
        if passed:
            print(f"ok   {name}")
        else:
            failed = True
            print(f"FAIL {name}: {detail}")
    return 1 if failed else 0


def _cmd_instrument(args) -> int:
    mode = Mode.FULL_TAPE if args.tape else Mode.COUNTS_ONLY
    spec = GeneratorSpec(Algorithm(args.algo), args.n,
                         include_init=args.include_init)
    result = attach(spec, mode).run()
    c = result.counts
    print(f"reads={c.reads},writes={c.writes},invocations={c.invocations}")
    if args.tape:
        csv = tape_to_csv(result.tape)
        if args.tape == "-":
            sys.stdout.write(csv)
        else:
            with open(args.tape, "w") as fh:
                fh.write(csv)
    return 0


def _cmd_bench(args) -> int:
    n_values = [int(part) for part in args.n.split(",") if part]
    pair = Pair.RECURSIVE_ASC_VS_DESC if args.pair == "recursive" else Pair.ACCEL_ASC_VS_DESC
    sink = Sink.COUNT_ONLY if args.sink == "count" else Sink.CHECKSUM_PARTS
    tables = counting.build_tables(max(n_values))
    print("n,predicted,measured")
    for n in n_values:
        report = bench_pair(tables, pair, n, args.reps, args.warmup, sink)
        print(f"{n},{report.predicted:.2f},{report.measured:.3f}")
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "count":
            return _cmd_count(args, parser)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "instrument":
            return _cmd_instrument(args)
        return _cmd_bench(args)
    except PartgenError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
