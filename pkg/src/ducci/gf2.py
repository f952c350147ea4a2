"""Polynomials over F_2 packed into Python ints, and the fields F_{2^t}.

Bit ``i`` of an int is the coefficient of ``X**i``; the zero polynomial is 0
and has degree -1.
"""

import random
from dataclasses import dataclass, field

from .arith import Factorization, factor, order_from_factored
from .errors import (
    DivisionByZeroPolyError,
    OrderIncompatibleError,
    ZeroElementError,
)

X = 0b10


def degree(a):
    return a.bit_length() - 1


def poly_mul(a, b):
    """Carry-less product, 4 bits of ``b`` per round."""
    if a == 0 or b == 0:
        return 0
    if a.bit_length() < b.bit_length():
        a, b = b, a
    a2 = a << 1
    table = [0, a, a2, a2 ^ a]
    table += [x ^ (a << 2) for x in table]
    table += [x ^ (a << 3) for x in table]
    result = 0
    shift = 0
    while b:
        result ^= table[b & 15] << shift
        b >>= 4
        shift += 4
    return result


def poly_divmod(a, m):
    if m == 0:
        raise DivisionByZeroPolyError("division by the zero polynomial")
    dm = m.bit_length()
    q = 0
    while a.bit_length() >= dm:
        s = a.bit_length() - dm
        a ^= m << s
        q |= 1 << s
    return q, a


def poly_mod(a, m):
    if m == 0:
        raise DivisionByZeroPolyError("division by the zero polynomial")
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def poly_gcd(a, b):
    # over F_2 every nonzero polynomial is monic
    while b:
        a, b = b, poly_mod(a, b)
    return a


def poly_mulmod(a, b, m):
    return poly_mod(poly_mul(a, b), m)


def poly_powmod(a, e, m):
    result = 1
    a = poly_mod(a, m)
    for bit in bin(e)[2:]:
        result = poly_mulmod(result, result, m)
        if bit == "1":
            result = poly_mulmod(result, a, m)
    return poly_mod(result, m)


def poly_str(a):
    if a == 0:
        return "0"
    terms = []
    for i in range(degree(a), -1, -1):
        if a >> i & 1:
            terms.append("1" if i == 0 else "X" if i == 1 else f"X^{i}")
    return " + ".join(terms)


def _prime_divisors(k):
    return [p for p, _ in factor(k).factors]


def is_irreducible(f):
    """Rabin's test: X^(2^t) = X mod f, and X^(2^(t/q)) - X coprime to f."""
    t = degree(f)
    if t < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    if t == 1:
        return True
    if not f & 1:
        return False

    def frob_power(k):
        x = X
        for _ in range(k):
            x = poly_mulmod(x, x, f)
        return x

    if frob_power(t) != X:
        return False
    return all(poly_gcd(f, frob_power(t // q) ^ X) == 1 for q in _prime_divisors(t))


def find_irreducible(t, seed=1):
    if t < 1:
        raise ValueError("degree must be >= 1")
    if t == 1:
        return X
    rng = random.Random(seed)
    while True:
        # odd constant term, leading coefficient set
        f = (1 << t) | rng.getrandbits(t) | 1
        if is_irreducible(f):
            return f


@dataclass(frozen=True)
class FieldCtx:
    """The field F_2[X]/(modulus), together with the factored order of its unit group."""

    t: int
    modulus: int
    group_order: Factorization = field(repr=False)

    def __post_init__(self):
        assert degree(self.modulus) == self.t
        assert self.group_order.value == (1 << self.t) - 1

    @classmethod
    def build(cls, t, seed=1):
        modulus = find_irreducible(t, seed)
        return cls(t, modulus, factor((1 << t) - 1))

    def mul(self, a, b):
        return poly_mod(poly_mul(a, b), self.modulus)

    def pow(self, a, e):
        return poly_powmod(a, e, self.modulus)

    def elem(self, rep):
        return FieldElem(self, poly_mod(rep, self.modulus))

    def one(self):
        return FieldElem(self, 1)

    def order_of(self, rep):
        if rep == 0:
            raise ZeroElementError("zero has no multiplicative order")
        return order_from_factored(lambda k: self.pow(rep, k) == 1, self.group_order)


@dataclass(frozen=True)
class FieldElem:
    ctx: FieldCtx = field(repr=False)
    rep: int

    def __post_init__(self):
        assert self.rep.bit_length() <= self.ctx.t

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ctx.elem(other)
        return FieldElem(self.ctx, self.rep ^ other.rep)

    __radd__ = __add__
    __sub__ = __add__

    def __mul__(self, other):
        return FieldElem(self.ctx, self.ctx.mul(self.rep, other.rep))

    def __pow__(self, e):
        if e < 0:
            if self.rep == 0:
                raise ZeroElementError("zero is not invertible")
            e %= self.ctx.group_order.value
        return FieldElem(self.ctx, self.ctx.pow(self.rep, e))

    def is_zero(self):
        return self.rep == 0


def elem_order(x):
    return x.ctx.order_of(x.rep)


def nth_root_of_unity(ctx, n, seed=1):
    """An element of exact multiplicative order ``n``."""
    q_total = ctx.group_order.value
    if q_total % n:
        raise OrderIncompatibleError(f"{n} does not divide 2^{ctx.t} - 1")
    cofactor = q_total // n
    primes = _prime_divisors(n) if n > 1 else []
    rng = random.Random(seed)
    while True:
        r = rng.getrandbits(ctx.t)
        if r == 0:
            continue
        c = ctx.pow(r, cofactor)
        if all(ctx.pow(c, n // q) != 1 for q in primes):
            return FieldElem(ctx, c)
