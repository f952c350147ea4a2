"""Command-line entry point: ``ducci <subcommand> ...``."""

import argparse
import csv
import io
import json
import sys

from .dynamics import DEFAULT_MAX_STEPS, simulate_binary_period, simulate_period
from .errors import StepBudgetExceeded, TooManyError
from .partitions import (
    best_coset,
    corollary_bound_report,
    partition_count,
    partition_enumerate,
    unit_coset_representatives,
)
from .period import bounds, period_algebraic, period_any
from .report import (
    checks_to_json,
    checks_to_text,
    compute_table,
    rows_to_csv,
    rows_to_json,
    rows_to_text,
    run_verify,
)


def positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def odd_int(text):
    value = int(text)
    if value < 3 or value % 2 == 0:
        raise argparse.ArgumentTypeError(f"expected an odd integer >= 3, got {text}")
    return value


def _emit_records(dicts, fmt, out):
    if fmt == "json":
        out.write(json.dumps(dicts if len(dicts) > 1 else dicts[0], indent=2) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(dicts[0]), lineterminator="\n")
        w.writeheader()
        for d in dicts:
            w.writerow({k: "" if v is None else v for k, v in d.items()})
        out.write(buf.getvalue())
    else:
        for d in dicts:
            out.write(" ".join(f"{k}={'-' if v is None else v}" for k, v in d.items()) + "\n")


def cmd_period(args, out):
    rec = period_any(args.n, args.seed)
    _emit_records([rec.to_dict()], args.format, out)
    return 0


def cmd_table(args, out):
    rows = compute_table(args.max, args.seed, args.threads)
    if args.format == "json":
        out.write(rows_to_json(rows) + "\n")
    elif args.format == "csv":
        out.write(rows_to_csv(rows))
    else:
        out.write(rows_to_text(rows))
    return 0


def cmd_partitions(args, out):
    n = args.n
    if args.best:
        a, count = best_coset(n)
        dicts = [{"n": n, "a": a, "partition_count": count}]
    elif args.a is not None:
        dicts = [{"n": n, "a": args.a, "partition_count": partition_count(args.a, n)}]
    else:
        dicts = [{"n": n, "a": a, "partition_count": partition_count(a, n)} for a in unit_coset_representatives(n)]
    if args.enumerate:
        listed = []
        for d in dicts:
            for v in partition_enumerate(d["a"], n, args.cap):
                listed.append({"n": n, "a": d["a"], "parts": " ".join(map(str, v.parts)), "q_u": v.q_u})
        dicts = listed
    _emit_records(dicts, args.format, out)
    return 0


def cmd_bounds(args, out):
    b1, b2, with_minus_one = bounds(args.n)
    d = {"n": args.n, "b1": b1, "b2": b2, "with_minus_one": with_minus_one}
    if args.corollary:
        d.update(corollary_bound_report(args.n, period_algebraic(args.n, args.seed)))
    _emit_records([d], args.format, out)
    return 0


def cmd_simulate(args, out):
    if args.start_n is not None:
        res = simulate_binary_period(args.start_n, args.max_steps)
    elif args.entries:
        res = simulate_period(tuple(args.entries), args.max_steps)
    else:
        raise argparse.ArgumentTypeError("give tuple entries or --start-n")
    _emit_records([{"preperiod": res.preperiod, "period": res.period}], args.format, out)
    return 0


def cmd_verify(args, out):
    checks = run_verify(
        args.max,
        seed=args.seed,
        threads=args.threads,
        max_steps=args.max_steps,
        golden_path=args.golden,
        oeis_path=args.oeis,
    )
    out.write(checks_to_json(checks) + "\n" if args.format == "json" else checks_to_text(checks))
    return 0 if all(c.passed for c in checks) else 1


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--seed", type=int, default=1)
    common.add_argument("--threads", type=positive_int, default=1)
    common.add_argument("--max-steps", type=positive_int, default=DEFAULT_MAX_STEPS)

    parser = argparse.ArgumentParser(prog="ducci", description="Periods of Ducci sequences and their partition bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("period", parents=[common], help="P(n) with its bounds")
    p.add_argument("n", type=positive_int)
    p.set_defaults(func=cmd_period)

    p = sub.add_parser("table", parents=[common], help="rows n, P(n), t, a, #P_a,n for odd n")
    p.add_argument("--max", type=odd_int, default=101)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("partitions", parents=[common], help="partition counts per doubling coset")
    p.add_argument("n", type=odd_int)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--a", type=positive_int)
    group.add_argument("--best", action="store_true")
    p.add_argument("--enumerate", action="store_true", help="list the partitions themselves")
    p.add_argument("--cap", type=positive_int, default=10**5)
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("bounds", parents=[common], help="B1, B2 and the with -1 flag")
    p.add_argument("n", type=odd_int)
    p.add_argument("--corollary", action="store_true", help="add the counting-bound report")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("simulate", parents=[common], help="iterate the Ducci map until it cycles")
    p.add_argument("entries", type=int, nargs="*")
    p.add_argument("--start-n", type=positive_int, help="simulate (0,...,0,1) of this length, bit-packed")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", parents=[common], help="run every check; exit 0 iff all pass")
    p.add_argument("--max", type=odd_int, default=101)
    p.add_argument("--golden", help="alternative golden CSV")
    p.add_argument("--oeis", help="A038553 b-file to compare against")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (StepBudgetExceeded, TooManyError) as exc:
        sys.stderr.write(f"ducci: {exc}\n")
        return 1
    except (ValueError, argparse.ArgumentTypeError) as exc:
        sys.stderr.write(f"ducci: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
