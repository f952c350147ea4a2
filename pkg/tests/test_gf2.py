import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ducci.errors import DivisionByZeroPolyError, OrderIncompatibleError, ZeroElementError
from ducci.gf2 import (
    FieldCtx,
    degree,
    elem_order,
    find_irreducible,
    is_irreducible,
    nth_root_of_unity,
    poly_divmod,
    poly_gcd,
    poly_mod,
    poly_mul,
)

# number of irreducible polynomials over F_2 of degree 1..12
IRREDUCIBLE_COUNTS = [2, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335]


def schoolbook(a, b):
    """Bit-by-bit carry-less product; independent of the windowed version."""
    out = 0
    i = 0
    while b >> i:
        if b >> i & 1:
            out ^= a << i
        i += 1
    return out


def reducible_upto(max_deg):
    polys = {d: range(1 << d, 1 << (d + 1)) for d in range(1, max_deg)}
    out = set()
    for d1 in range(1, max_deg // 2 + 1):
        for d2 in range(d1, max_deg - d1 + 1):
            for f in polys[d1]:
                for g in polys[d2]:
                    out.add(schoolbook(f, g))
    return out


def test_poly_examples():
    assert poly_mul(0b11, 0b11) == 0b101  # (X+1)^2 = X^2+1
    # X^3 + X + 1 = X (X^2 + 1) + 1
    assert poly_mod(0b1011, 0b101) == 1
    assert poly_divmod(0b1011, 0b101) == (0b10, 1)
    assert poly_gcd(0b101, 0b11) == 0b11
    with pytest.raises(DivisionByZeroPolyError):
        poly_mod(0b101, 0)


@settings(max_examples=300)
@given(st.integers(min_value=0, max_value=2**200), st.integers(min_value=0, max_value=2**200))
def test_poly_mul_matches_schoolbook(a, b):
    assert poly_mul(a, b) == schoolbook(a, b)


@settings(max_examples=300)
@given(st.integers(min_value=0, max_value=2**150), st.integers(min_value=1, max_value=2**70))
def test_divmod_reassembles(a, m):
    q, r = poly_divmod(a, m)
    assert schoolbook(q, m) ^ r == a
    assert degree(r) < degree(m)


def test_is_irreducible_small():
    assert is_irreducible(0b111)
    assert not is_irreducible(0b101)


def test_is_irreducible_exhaustive_to_degree_12():
    reducible = reducible_upto(12)
    for d in range(1, 13):
        irreducible = [f for f in range(1 << d, 1 << (d + 1)) if f not in reducible]
        assert len(irreducible) == IRREDUCIBLE_COUNTS[d - 1]
        assert [f for f in range(1 << d, 1 << (d + 1)) if is_irreducible(f)] == irreducible


def test_find_irreducible():
    assert find_irreducible(1) in (0b10, 0b11)
    assert find_irreducible(2) == 0b111
    f = find_irreducible(8, seed=1)
    assert degree(f) == 8 and is_irreducible(f)
    assert find_irreducible(8, seed=1) == f
    for t in (36, 52, 100):
        assert is_irreducible(find_irreducible(t, seed=3))


@pytest.fixture(scope="module")
def f2_10():
    return FieldCtx.build(10)


@st.composite
def field_triples(draw, t=10):
    return [draw(st.integers(min_value=0, max_value=2**t - 1)) for _ in range(3)]


@settings(max_examples=200)
@given(field_triples())
def test_field_axioms(f2_10, triple):
    a, b, c = (f2_10.elem(x) for x in triple)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a ** (2**10) == a
    assert (a + 1) ** 2 == a**2 + 1


def brute_order(ctx, x):
    y, k = x, 1
    while y != 1:
        y = ctx.mul(y, x)
        k += 1
    return k


@pytest.mark.parametrize("t", [2, 3, 4, 6, 8, 9])
def test_elem_order_matches_brute_force(t):
    ctx = FieldCtx.build(t)
    for x in range(1, 1 << t):
        k = ctx.order_of(x)
        assert k == brute_order(ctx, x)
        assert ctx.group_order.value % k == 0


@settings(max_examples=100)
@given(st.integers(min_value=1, max_value=2**60 - 1))
def test_elem_order_properties(x):
    ctx = FieldCtx.build(60)
    e = ctx.elem(x)
    k = elem_order(e)
    assert ctx.group_order.value % k == 0
    assert (e**k).rep == 1
    for q in ctx.group_order.primes:
        if k % q == 0:
            assert (e ** (k // q)).rep != 1


def test_elem_order_examples():
    ctx = FieldCtx.build(2)
    assert elem_order(ctx.one()) == 1
    assert elem_order(ctx.elem(0b10)) == 3
    with pytest.raises(ZeroElementError):
        elem_order(ctx.elem(0))


def test_roots_of_unity_from_table():
    ctx4 = FieldCtx.build(2)
    assert elem_order(nth_root_of_unity(ctx4, 3)) == 3

    ctx16 = FieldCtx.build(4)
    z = nth_root_of_unity(ctx16, 5)
    assert elem_order(z) == 5
    assert elem_order(z + 1) == 15

    ctx = FieldCtx.build(10)
    z = nth_root_of_unity(ctx, 11)
    assert elem_order(z) == 11
    assert elem_order(z + 1) == 341

    ctx64 = FieldCtx.build(6)
    z = nth_root_of_unity(ctx64, 9)
    assert elem_order(z) == 9
    assert elem_order(z + 1) == 63
    assert 3 % elem_order(z**3 + 1) == 0


def test_root_of_unity_incompatible():
    with pytest.raises(OrderIncompatibleError):
        nth_root_of_unity(FieldCtx.build(4), 7)


def test_roots_differ_by_seed_but_keep_order():
    ctx = FieldCtx.build(36)
    roots = {nth_root_of_unity(ctx, 37, seed=s).rep for s in range(1, 6)}
    assert all(ctx.order_of(r) == 37 for r in roots)


def test_fixed_seed_is_reproducible():
    rng = random.Random(0)
    t = rng.randrange(20, 40)
    assert FieldCtx.build(t, 5) == FieldCtx.build(t, 5)
