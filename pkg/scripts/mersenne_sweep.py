"""List odd n <= N with P(n) = n, and which method decided each n."""

import argparse
from collections import Counter

from ducci.period import period_is_n

parser = argparse.ArgumentParser()
parser.add_argument("--max", type=int, default=1025)
args = parser.parse_args()

hits, methods = [], Counter()
for n in range(3, args.max + 1, 2):
    ok, method = period_is_n(n)
    methods[method] += 1
    if ok:
        hits.append(n)
print("P(n) = n at:", hits)
print("methods:", dict(methods))
