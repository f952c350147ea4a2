"""The Ducci map and cycle detection on its orbits."""

from dataclasses import dataclass

from .arith import factor, order_from_factored
from .errors import StepBudgetExceeded

DEFAULT_MAX_STEPS = 10**7


@dataclass(frozen=True)
class CycleResult:
    preperiod: int
    period: int


def ducci_step(v):
    n = len(v)
    return tuple(abs(v[i] - v[(i + 1) % n]) for i in range(n))


def brent(f, x0, max_steps):
    """Brent's cycle detection for the orbit of ``x0`` under ``f``.

    ``max_steps`` caps the evaluations spent locating the cycle length; the
    preperiod search afterwards costs at most as much again.
    """
    power = lam = 1
    tortoise = x0
    hare = f(x0)
    steps = 1
    while tortoise != hare:
        if power == lam:
            tortoise = hare
            power *= 2
            lam = 0
        hare = f(hare)
        lam += 1
        steps += 1
        if steps > max_steps:
            raise StepBudgetExceeded(max_steps)

    tortoise = hare = x0
    for _ in range(lam):
        hare = f(hare)
    mu = 0
    while tortoise != hare:
        tortoise = f(tortoise)
        hare = f(hare)
        mu += 1
    return CycleResult(mu, lam)


def simulate_period(v, max_steps=DEFAULT_MAX_STEPS):
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    v = tuple(v)
    if not v:
        raise ValueError("a Ducci tuple needs at least one entry")
    return brent(ducci_step, v, max_steps)


def binary_start(n):
    """The start (0, ..., 0, 1) packed with entry i at bit i."""
    return 1 << (n - 1)


def binary_stepper(n):
    # on {0,1} entries |a - b| = a xor b; entry i+1 lands on bit i after >> 1
    mask = (1 << n) - 1
    top = n - 1

    def step(v):
        return (v ^ (v >> 1) ^ ((v & 1) << top)) & mask

    return step


def unpack(v, n):
    return tuple(v >> i & 1 for i in range(n))


def simulate_binary_period(n, max_steps=DEFAULT_MAX_STEPS):
    """Period of the orbit of (0, ..., 0, 1), on bit-packed tuples.

    The step function is inlined into Brent's loop; this is the hot path
    for the largest simulated periods.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    mask = (1 << n) - 1
    top = n - 1
    x0 = binary_start(n)

    power = lam = 1
    tortoise = x0
    hare = (x0 ^ (x0 >> 1) ^ ((x0 & 1) << top)) & mask
    steps = 1
    while tortoise != hare:
        if power == lam:
            if steps > max_steps:
                raise StepBudgetExceeded(max_steps)
            tortoise = hare
            power *= 2
            lam = 0
        hare = (hare ^ (hare >> 1) ^ ((hare & 1) << top)) & mask
        lam += 1
        steps += 1
    if steps > max_steps:
        raise StepBudgetExceeded(max_steps)

    step = binary_stepper(n)
    tortoise = hare = x0
    for _ in range(lam):
        hare = (hare ^ (hare >> 1) ^ ((hare & 1) << top)) & mask
    mu = 0
    while tortoise != hare:
        tortoise = step(tortoise)
        hare = step(hare)
        mu += 1
    return CycleResult(mu, lam)


def binary_period_dividing(n, d):
    """P(n) if it divides ``d``, else None, for odd ``n``; by direct iteration.

    For odd n the orbit of (0, ..., 0, 1) enters its cycle after one step
    (the start has odd weight, so it is not an image of D, and D is
    invertible on the even-weight vectors).  Each test costs at most ``d`` steps.
    """
    if n % 2 == 0:
        raise ValueError("n must be odd")
    step = binary_stepper(n)
    first = step(binary_start(n))

    def returns_after(k):
        v = first
        for _ in range(k):
            v = step(v)
        return v == first

    if not returns_after(d):
        return None
    return order_from_factored(returns_after, factor(d))
