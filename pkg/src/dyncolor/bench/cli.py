"""Command-line trace replay: ``dyncolor-bench --engine full2 --gen 'random-forest(64,63)'``."""

from __future__ import annotations

import argparse
import sys

from ..errors import DynColorError
from .generators import InvalidSpec, generate
from .runner import ENGINES, ContractViolation, UnsupportedEvent, run
from .trace import ParseError, load

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dyncolor-bench",
                                description="Replay a graph update trace against a coloring engine.")
    p.add_argument("--engine", required=True, choices=ENGINES)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--trace", metavar="PATH", help="trace file to replay")
    src.add_argument("--gen", metavar="SPEC", help="generator spec, e.g. 'random-forest(8,7)'")
    p.add_argument("--seed", type=int, default=0, help="generator seed (u64)")
    p.add_argument("--n", type=int, help="engine vertex count (at least the trace's n)")
    p.add_argument("--gamma", type=int, help="arboricity bound for the arb engine")
    p.add_argument("--mcap", type=int, help="edge-count capacity for delta1")
    p.add_argument("--dcap", type=int, help="degree capacity for delta1 and arb")
    p.add_argument("--check", choices=("none", "oracle"), default="none")
    p.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    p.add_argument("--dump-trace", metavar="PATH", help="also save the replayed trace")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is not None and not 0 <= args.seed < 2 ** 64:
        parser.error("--seed must be an unsigned 64-bit integer")
    try:
        trace = load(args.trace) if args.trace else generate(args.gen, args.seed)
    except (OSError, ParseError, InvalidSpec) as exc:
        print(f"dyncolor-bench: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.n is not None and args.n < trace.n:
        print(f"dyncolor-bench: --n {args.n} is smaller than the trace's n={trace.n}",
              file=sys.stderr)
        return EXIT_USAGE
    for flag in ("gamma", "mcap", "dcap"):
        val = getattr(args, flag)
        if val is not None and val < 1:
            print(f"dyncolor-bench: --{flag} must be positive", file=sys.stderr)
            return EXIT_USAGE
    if args.dump_trace:
        from .trace import save
        save(trace, args.dump_trace)
    try:
        report = run(args.engine, trace, args.check, mcap=args.mcap, dcap=args.dcap,
                     gamma=args.gamma, n=args.n)
    except (UnsupportedEvent, ContractViolation, DynColorError) as exc:
        print(f"dyncolor-bench: contract violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    text = report.to_json() + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for msg in report.messages:
        print(f"dyncolor-bench: {msg}", file=sys.stderr)
    return EXIT_VIOLATION if report.violations else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
