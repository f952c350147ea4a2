"""Tabulate the counting bounds next to P(n) and the best partition count.

The asymptotic main terms are printed for comparison only.
"""

import argparse
import csv
import sys

from ducci.partitions import best_coset, corollary_bound_report
from ducci.period import period_algebraic

parser = argparse.ArgumentParser()
parser.add_argument("--max", type=int, default=151)
args = parser.parse_args()

cols = ["n", "t", "period", "best_a", "best_count", "t_exceeds_sqrt_2n", "N", "dense_a",
        "dense_count", "binomial_bound", "explicit_prime_bound", "coset_density_main_term",
        "distinct_parts_main_term"]
w = csv.DictWriter(sys.stdout, fieldnames=cols, extrasaction="ignore", lineterminator="\n")
w.writeheader()
for n in range(3, args.max + 1, 2):
    rep = corollary_bound_report(n, period_algebraic(n))
    rep["best_a"], rep["best_count"] = best_coset(n)
    w.writerow(rep)
