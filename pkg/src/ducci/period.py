"""Algebraic computation of P(n), its divisibility bounds, and theorem checks."""

from dataclasses import asdict, dataclass
from math import isqrt
from typing import Optional

from .arith import factor, is_prime, lcm_all, mult_order, odd_part
from .dynamics import binary_period_dividing
from .errors import NotApplicableError
from .gf2 import FieldCtx, nth_root_of_unity


@dataclass(frozen=True)
class PeriodRecord:
    n: int
    t: int
    period: int
    b1: int
    b2: Optional[int]
    with_minus_one: bool
    pell_no_odd: Optional[bool]

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class PellResult:
    p: int
    neg_pell_fundamental: tuple
    has_odd_solution: bool
    witness: Optional[tuple]

    def __post_init__(self):
        x1, y1 = self.neg_pell_fundamental
        assert x1 * x1 - self.p * y1 * y1 == -1
        if self.witness is not None:
            x, y = self.witness
            assert x % 2 == 1 and y % 2 == 1 and x * x - self.p * y * y == -4


def doubling_orbit_reps(n):
    """Smallest element of each orbit of {1, ..., n-1} under x -> 2x mod n."""
    seen = bytearray(n)
    reps = []
    for a in range(1, n):
        if seen[a]:
            continue
        reps.append(a)
        x = a
        while not seen[x]:
            seen[x] = 1
            x = 2 * x % n
    return reps


def bounds(n):
    """(B1, B2 or None, with_minus_one) for odd n >= 3."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"bounds need odd n >= 3, got {n}")
    t = mult_order(2, n)
    b1 = (1 << t) - 1
    with_minus_one = t % 2 == 0 and pow(2, t // 2, n) == n - 1
    b2 = n * ((1 << (t // 2)) - 1) if with_minus_one else None
    return b1, b2, with_minus_one


def prime_power_base(n):
    """The prime p with n = p^k, or None."""
    f = factor(n).factors
    return f[0][0] if len(f) == 1 else None


def negative_pell_fundamental(p):
    """Minimal positive solution of x^2 - p y^2 = -1 from the continued fraction of sqrt(p)."""
    if p % 4 != 1:
        raise NotApplicableError(f"{p} is not 1 mod 4")
    a0 = isqrt(p)
    if a0 * a0 == p:
        raise NotApplicableError(f"{p} is a square")
    m, d, a = 0, 1, a0
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    period = 0
    while True:
        m = d * a - m
        d = (p - m * m) // d
        a = (a0 + m) // d
        period += 1
        if a == 2 * a0:
            break
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    if period % 2 == 0:
        raise NotApplicableError(f"x^2 - {p} y^2 = -1 has no solution")
    assert h * h - p * k * k == -1
    return h, k


def pell_no_odd_solutions(p, y_bound=None):
    """Search odd y <= 2*y1 for x^2 - p y^2 = -4 with x odd.

    Any odd solution gives the unit (x + y sqrt p)/2, whose cube is integral,
    so the smallest odd solution has y at most twice that of the minimal
    norm -1 solution.
    """
    if p % 8 != 5:
        raise NotApplicableError(f"{p} is not 5 mod 8")
    x1, y1 = negative_pell_fundamental(p)
    limit = 2 * y1 if y_bound is None else y_bound
    witness = None
    for y in range(1, limit + 1, 2):
        s = p * y * y - 4
        x = isqrt(s)
        if x * x == s and x % 2 == 1:
            witness = (x, y)
            break
    return PellResult(p, (x1, y1), witness is not None, witness)


def _pell_flag(n, t):
    """pell_no_odd when n = p^k, p = 5 mod 8 and 2 generates (Z/nZ)*; else None."""
    p = prime_power_base(n)
    if p is None or p % 8 != 5:
        return None
    phi = n // p * (p - 1)
    if t != phi:
        return None
    return not pell_no_odd_solutions(p).has_odd_solution


def period_algebraic(n, seed=1):
    """P(n) for odd n as an lcm of orders of zeta^a + 1 in F_{2^t}."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"period_algebraic needs odd n >= 3, got {n}")
    t = mult_order(2, n)
    ctx = FieldCtx.build(t, seed)
    zeta = nth_root_of_unity(ctx, n, seed)
    orders = [ctx.order_of(ctx.pow(zeta.rep, a) ^ 1) for a in doubling_orbit_reps(n)]
    b1, b2, with_minus_one = bounds(n)
    return PeriodRecord(
        n=n,
        t=t,
        period=lcm_all(orders),
        b1=b1,
        b2=b2,
        with_minus_one=with_minus_one,
        pell_no_odd=_pell_flag(n, t),
    )


def period_any(n, seed=1):
    """P(n) for any n >= 1 via P(2^k m) = 2^k P(m); P(2^k) = 1.

    For even n the bound fields describe the odd part m.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    k, m = odd_part(n)
    if m == 1:
        return PeriodRecord(n=n, t=1, period=1, b1=1, b2=None, with_minus_one=False, pell_no_odd=None)
    rec = period_algebraic(m, seed)
    if k == 0:
        return rec
    return PeriodRecord(
        n=n,
        t=rec.t,
        period=rec.period << k,
        b1=rec.b1,
        b2=rec.b2,
        with_minus_one=rec.with_minus_one,
        pell_no_odd=rec.pell_no_odd,
    )


def _is_power_of_two(x):
    return x >= 1 and x & (x - 1) == 0


def validate_theorems(n, rec):
    """Named pass/fail results for every divisibility and size clause that applies to n."""
    P = rec.period
    checks = {
        "thm1_divides_b1": rec.b1 % P == 0,
        "thm2_n_divides_period": P % n == 0,
        "thm2_period_eq_n_iff_mersenne": (P == n) == _is_power_of_two(n + 1),
    }
    if rec.with_minus_one:
        checks["thm1_divides_b2"] = rec.b2 % P == 0
        checks["thm2_lower_bound"] = P >= n * (n - 2)
        checks["thm2_equality_iff_fermat"] = (P == n * (n - 2)) == _is_power_of_two(n - 1)
    if rec.pell_no_odd:
        checks["thm1_divides_b2_third"] = rec.b2 % 3 == 0 and (rec.b2 // 3) % P == 0
    return checks


def is_primitive_root_prime(n):
    return is_prime(n) and mult_order(2, n) == n - 1


ALGEBRAIC_MAX_T = 100


def period_is_n(n, seed=1, max_t=ALGEBRAIC_MAX_T):
    """Decide P(n) == n for odd n >= 3; returns (answer, method).

    Uses the field computation while 2^t - 1 is cheap to factor, otherwise
    the exact period among the divisors of n by direct iteration.
    """
    t = mult_order(2, n)
    if t <= max_t:
        return period_algebraic(n, seed).period == n, "algebraic"
    return binary_period_dividing(n, n) == n, "simulation"
