"""Exact integer arithmetic: primality, factorization, multiplicative orders.

Primality battery (frozen):

* ``m < 2**64`` (in fact ``m < 3.3e24``): strong probable-prime test to the
  twelve bases 2, 3, 5, ..., 37.  This set is known to be deterministic for
  every ``m < 318665857834031151167461``.
* larger ``m``: the same twelve strong tests followed by a strong Lucas test
  with Selfridge parameters (method A).  Together this is a strengthened
  Baillie-PSW test; no counterexample is known.
"""

from dataclasses import dataclass
from functools import reduce
from math import gcd, isqrt

from .errors import DomainTooSmallError, NotCoprimeError

MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
MR_DETERMINISTIC_LIMIT = 318665857834031151167461
TRIAL_LIMIT = 10**5


def _sieve(limit):
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i, f in enumerate(flags) if f]


SMALL_PRIMES = _sieve(TRIAL_LIMIT)


def _strong_probable_prime(m, base):
    d = m - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(base, d, m)
    if x == 1 or x == m - 1:
        return True
    for _ in range(s - 1):
        x = x * x % m
        if x == m - 1:
            return True
    return False


def _jacobi(a, m):
    a %= m
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                result = -result
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            result = -result
        a %= m
    return result if m == 1 else 0


def _strong_lucas_probable_prime(m):
    r = isqrt(m)
    if r * r == m:
        return False
    d = 5
    while True:
        j = _jacobi(d, m)
        if j == -1:
            break
        if j == 0 and abs(d) != m:
            return False
        d = -d - 2 if d > 0 else -d + 2
    p, q = 1, (1 - d) // 4

    k = m + 1
    s = 0
    while k % 2 == 0:
        k //= 2
        s += 1

    inv2 = (m + 1) // 2
    u, v, qk = 1, p, q % m
    for bit in bin(k)[3:]:
        u, v = u * v % m, (v * v - 2 * qk) % m
        qk = qk * qk % m
        if bit == "1":
            u, v = (p * u + v) * inv2 % m, (d * u + p * v) * inv2 % m
            qk = qk * q % m
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % m
        qk = qk * qk % m
        if v == 0:
            return True
    return False


def is_prime(m):
    if m < 2:
        return False
    for p in SMALL_PRIMES[:25]:
        if m % p == 0:
            return m == p
    if not all(_strong_probable_prime(m, b) for b in MR_BASES):
        return False
    if m < MR_DETERMINISTIC_LIMIT:
        return True
    return _strong_lucas_probable_prime(m)


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple  # ((prime, exponent), ...) with strictly increasing primes

    def __post_init__(self):
        primes = [p for p, _ in self.factors]
        assert primes == sorted(set(primes)), "primes must be strictly increasing"
        assert all(e >= 1 for _, e in self.factors)
        assert product(p**e for p, e in self.factors) == self.value, "reassembly failed"

    @property
    def primes(self):
        return [p for p, _ in self.factors]

    def as_dict(self):
        return dict(self.factors)


def product(values):
    return reduce(lambda x, y: x * y, values, 1)


def pollard_brent(m, c):
    """One Pollard-Brent rho run with polynomial x^2 + c, start 2.

    Returns a nontrivial factor, or ``m`` when this ``c`` fails.
    """
    y, r, q = 2, 1, 1
    g = 1
    batch = 128
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % m
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(batch, r - k)):
                y = (y * y + c) % m
                q = q * abs(x - y) % m
            g = gcd(q, m)
            k += batch
        r *= 2
    if g == m:
        # batch overshot; retrace one step at a time
        while True:
            ys = (ys * ys + c) % m
            g = gcd(abs(x - ys), m)
            if g > 1:
                break
    return g


def _split(m, out):
    if m == 1:
        return
    if is_prime(m):
        out[m] = out.get(m, 0) + 1
        return
    r = isqrt(m)
    if r * r == m:
        _split(r, out)
        _split(r, out)
        return
    c = 1
    while True:
        d = pollard_brent(m, c)
        if 1 < d < m:
            break
        c += 1
    _split(d, out)
    _split(m // d, out)


def factor(m):
    if m < 1:
        raise ValueError("factor requires m >= 1")
    counts = {}
    rest = m
    for p in SMALL_PRIMES:
        if p * p > rest:
            break
        while rest % p == 0:
            counts[p] = counts.get(p, 0) + 1
            rest //= p
    if rest > 1:
        _split(rest, counts)
    return Factorization(m, tuple(sorted(counts.items())))


def euler_phi(n):
    if n < 1:
        raise ValueError("euler_phi requires n >= 1")
    return product(p ** (e - 1) * (p - 1) for p, e in factor(n).factors)


def lcm_all(values):
    values = list(values)
    if not values:
        raise ValueError("lcm_all of an empty list")
    return reduce(lambda x, y: x * y // gcd(x, y), values)


def order_from_factored(is_identity_power, group_order):
    """Order of an element of a group with factored order ``group_order``.

    ``is_identity_power(k)`` must report whether the element raised to ``k``
    is the identity.  Each prime is stripped from the exponent while the
    power stays trivial.
    """
    order = group_order.value
    for q, e in group_order.factors:
        for _ in range(e):
            if is_identity_power(order // q):
                order //= q
            else:
                break
    return order


def _phi_factorization(n):
    counts = {}
    for p, e in factor(n).factors:
        if e > 1:
            counts[p] = counts.get(p, 0) + e - 1
        for q, f in factor(p - 1).factors:
            counts[q] = counts.get(q, 0) + f
    return Factorization(euler_phi(n), tuple(sorted(counts.items())))


def mult_order(g, n):
    if n < 2:
        raise DomainTooSmallError(f"modulus must be >= 2, got {n}")
    if gcd(g, n) != 1:
        raise NotCoprimeError(f"gcd({g}, {n}) != 1")
    g %= n
    return order_from_factored(lambda k: pow(g, k, n) == 1, _phi_factorization(n))


def odd_part(n):
    k = 0
    while n % 2 == 0:
        n //= 2
        k += 1
    return k, n
