"""Recompute the odd-n table and diff it against the checked-in corpus."""

import argparse
import time

from ducci.report import compute_table, load_golden, rows_to_text

parser = argparse.ArgumentParser()
parser.add_argument("--max", type=int, default=101)
parser.add_argument("--threads", type=int, default=1)
args = parser.parse_args()

start = time.perf_counter()
rows = compute_table(args.max, threads=args.threads)
elapsed = time.perf_counter() - start
print(rows_to_text(rows), end="")

golden = {(r.n, r.a): r for r in load_golden()}
diffs = [r for r in rows if (r.n, r.a) in golden and golden[(r.n, r.a)] != r]
missing = [k for k in golden if k[0] <= args.max and k not in {(r.n, r.a) for r in rows}]
print(f"\n{len(rows)} rows in {elapsed:.2f}s; {len(diffs)} differ from corpus, {len(missing)} missing")
for r in diffs:
    print("  computed", r, "corpus", golden[(r.n, r.a)])
