"""Doubling cosets S_{a,n}, partition counts #P_{a,n}, and the counting bounds built on them."""

import math
from dataclasses import dataclass
from math import comb, gcd, isqrt

from .arith import is_prime, mult_order
from .errors import NotCoprimeError, TooManyError
from .gf2 import FieldCtx, nth_root_of_unity


@dataclass(frozen=True)
class CosetSet:
    n: int
    a: int
    members: tuple  # ((j, e_j), ...) sorted by j

    @property
    def t(self):
        return len(self.members)

    @property
    def parts(self):
        return [j for j, _ in self.members]


@dataclass(frozen=True)
class PartitionVector:
    coset: CosetSet
    bits: tuple  # u_j aligned with coset.members
    q_u: int

    def __post_init__(self):
        assert sum(j for (j, _), u in zip(self.coset.members, self.bits) if u) <= self.coset.t - 1

    @property
    def parts(self):
        return [j for (j, _), u in zip(self.coset.members, self.bits) if u]


def _check(a, n):
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be odd and >= 3, got {n}")
    if gcd(a, n) != 1:
        raise NotCoprimeError(f"gcd({a}, {n}) != 1")
    if not 1 <= a < n:
        raise ValueError(f"a must lie in [1, n), got {a}")


def coset_set(a, n):
    _check(a, n)
    members = []
    j, e = a, 0
    while True:
        members.append((j, e))
        j = 2 * j % n
        e += 1
        if j == a:
            break
    return CosetSet(n, a, tuple(sorted(members)))


def unit_coset_representatives(n):
    seen = bytearray(n)
    reps = []
    for a in range(1, n):
        if seen[a] or gcd(a, n) != 1:
            continue
        reps.append(a)
        x = a
        while not seen[x]:
            seen[x] = 1
            x = 2 * x % n
    return reps


def count_subsets_bounded(parts, limit):
    """Number of subsets of distinct ``parts`` with sum <= ``limit`` (empty set included)."""
    if limit < 0:
        return 0
    ways = [1] + [0] * limit
    for j in parts:
        if j > limit:
            continue
        for s in range(limit, j - 1, -1):
            ways[s] += ways[s - j]
    return sum(ways)


def partition_count(a, n):
    cs = coset_set(a, n)
    return count_subsets_bounded(cs.parts, cs.t - 1)


def partition_enumerate(a, n, cap=10**5):
    cs = coset_set(a, n)
    limit = cs.t - 1
    members = cs.members
    found = []

    def walk(i, total, chosen):
        if i == len(members):
            if len(found) >= cap:
                raise TooManyError(cap)
            bits = tuple(1 if k in chosen else 0 for k in range(len(members)))
            q = sum(1 << members[k][1] for k in chosen)
            found.append(PartitionVector(cs, bits, q))
            return
        walk(i + 1, total, chosen)
        j = members[i][0]
        if total + j <= limit:
            walk(i + 1, total + j, chosen + (i,))

    walk(0, 0, ())
    return found


def verify_injection(a, n, seed=1, cap=10**5):
    """True iff u -> (zeta + 1)^{Q_u} takes distinct values on all partitions."""
    vectors = partition_enumerate(a, n, cap)
    t = mult_order(2, n)
    ctx = FieldCtx.build(t, seed)
    base = nth_root_of_unity(ctx, n, seed).rep ^ 1
    images = {ctx.pow(base, v.q_u) for v in vectors}
    return len(images) == len(vectors)


def best_coset(n):
    """(a, #P_{a,n}) maximising the count; smallest a on ties."""
    best = None
    for a in unit_coset_representatives(n):
        c = partition_count(a, n)
        if best is None or c > best[1]:
            best = (a, c)
    return best


def distinct_partition_count(m):
    """q(m): partitions of m into distinct positive parts."""
    if m < 0:
        raise ValueError("m must be >= 0")
    ways = [1] + [0] * m
    for k in range(1, m + 1):
        for s in range(m, k - 1, -1):
            ways[s] += ways[s - k]
    return ways[m]


def coprime_distinct_partition_count(m, p):
    """Partitions of m into distinct parts, none divisible by p."""
    if m < 0:
        raise ValueError("m must be >= 0")
    ways = [1] + [0] * m
    for k in range(1, m + 1):
        if k % p == 0:
            continue
        for s in range(m, k - 1, -1):
            ways[s] += ways[s - k]
    return ways[m]


def explicit_prime_bound(n):
    """Explicit lower bound (80(n-2))^(-sqrt 2) exp(pi sqrt((n-2)/3)) for primes n with 2 primitive."""
    return (80 * (n - 2)) ** (-math.sqrt(2)) * math.exp(math.pi * math.sqrt((n - 2) / 3))


def small_coset_members(a, n, N):
    return [j for j in coset_set(a, n).parts if j <= N]


def binomial_subset_bound(s_count, t, N):
    """sum_{J <= t/N} C(s_count, J): subsets of parts <= N of size <= t/N."""
    return sum(comb(s_count, J) for J in range(t // N + 1))


def corollary_bound_report(n, rec):
    """Float evaluation of the counting bounds for one odd n.

    Only the explicit bound is meant to be compared with P(n); the
    asymptotic main terms omit unknown o(1) corrections.
    """
    t = rec.t
    sqrt_2n = math.sqrt(2 * n)
    N = isqrt(2 * n)
    primitive_prime = is_prime(n) and t == n - 1
    report = {
        "n": n,
        "t": t,
        "period": rec.period,
        "threshold_sqrt_2n": sqrt_2n,
        "t_exceeds_sqrt_2n": t > sqrt_2n,
        "N": N,
        "distinct_parts_main_term": math.exp(math.pi / math.sqrt(3) * math.sqrt(n)),
        "coset_density_main_term": math.exp(math.log(4) * t / sqrt_2n),
        "explicit_bound_applicable": primitive_prime,
        "explicit_prime_bound": explicit_prime_bound(n) if primitive_prime else None,
    }
    if primitive_prime:
        report["explicit_bound_holds"] = rec.period >= report["explicit_prime_bound"]
    reps = unit_coset_representatives(n)
    sizes = {a: len(small_coset_members(a, n, N)) for a in reps}
    a_star = max(reps, key=lambda a: (sizes[a], -a))
    report["dense_a"] = a_star
    report["dense_count"] = sizes[a_star]
    # average of #S_{a,n}(N) over the phi(n)/t cosets
    report["dense_average"] = sum(1 for j in range(1, N + 1) if gcd(j, n) == 1) / len(reps)
    if 2 <= N < t:
        report["binomial_bound"] = binomial_subset_bound(sizes[a_star], t, N)
    else:
        report["binomial_bound"] = None
    return report
