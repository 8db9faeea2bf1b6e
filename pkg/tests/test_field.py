import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from diagfermat import _poly
from diagfermat.errors import DivisionByZero, NotPrime, TooLarge
from diagfermat.field import arith, field_of_order, make_field, prime_power

SMALL_ORDERS = [2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27, 49, 64, 81, 121, 125]


def mobius(n):
    result, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    return -result if n > 1 else result


def irreducible_count(p, n):
    return sum(mobius(d) * p ** (n // d) for d in range(1, n + 1) if n % d == 0) // n


def order_mod(g, p):
    x, k = g % p, 1
    while x != 1:
        x, k = x * g % p, k + 1
    return k


def test_prime_field_generator_is_smallest_primitive_root():
    F = make_field(11)
    assert F.q == 11
    assert F.generator == 2
    assert order_mod(2, 11) == 10


@pytest.mark.parametrize("p", [3, 5, 7, 13, 31, 101, 257])
def test_generator_matches_direct_search(p):
    smallest = next(g for g in range(1, p) if order_mod(g, p) == p - 1)
    assert make_field(p).generator == smallest


def test_quadratic_extension_modulus():
    # first monic quadratic over GF(3) without roots, counting c0 + 3 c1 upward
    for c0, c1 in sorted(itertools.product(range(3), repeat=2), key=lambda c: c[0] + 3 * c[1]):
        if all((x * x + c1 * x + c0) % 3 for x in range(3)):
            break
    F = make_field(3, 2)
    assert F.q == 9
    assert F.modulus == (c0, c1, 1) == (1, 0, 1)


def test_composite_characteristic_rejected():
    with pytest.raises(NotPrime):
        make_field(4, 1)
    with pytest.raises(NotPrime):
        field_of_order(12)


def test_size_limit():
    with pytest.raises(TooLarge):
        make_field(2, 21)
    with pytest.raises(TooLarge):
        make_field(101, 2, limit=10_000)


@pytest.mark.parametrize("p, n", [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (3, 4), (5, 2), (5, 3)])
def test_irreducibility_test_counts(p, n):
    found = 0
    for t in range(p**n):
        f = [(t // p**i) % p for i in range(n)] + [1]
        found += _poly.is_irreducible(f, p)
    assert found == irreducible_count(p, n)


def test_irreducibility_needs_more_than_roots():
    # (x^2 + x + 1)^2 over GF(2) has no root but is reducible
    assert not _poly.is_irreducible([1, 0, 1, 0, 1], 2)


def test_arith_examples():
    F = make_field(11)
    assert arith(F, "mul", 9, 5) == 1
    with pytest.raises(DivisionByZero):
        arith(F, "inv", 0)
    assert F.dlog(8) == 3
    assert F.dlog(1) == 0
    assert F.dlog(10) == 5 and pow(2, 5, 11) == 10
    with pytest.raises(DivisionByZero):
        F.dlog(0)


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_generator_full_order_and_tables(q):
    F = field_of_order(q)
    assert F.pow(F.generator, q - 1) == 1
    assert sorted(F.exp.tolist()) == list(range(1, q))
    xs = np.arange(1, q)
    assert np.array_equal(F.exp[F.dlog(xs)], xs)
    if q > 2:
        # order exactly q - 1, checked with polynomial arithmetic
        g = _poly.trim(list(F.coeffs(F.generator)))
        f = list(F.modulus)
        x, k = g, 1
        while x != [1]:
            x, k = _poly.mulmod(x, g, f, F.p), k + 1
        assert k == q - 1


@pytest.mark.parametrize("q", [8, 9, 25, 27, 49, 64, 81])
def test_extension_mul_matches_polynomial_product(q):
    F = field_of_order(q)
    rng = np.random.default_rng(q)
    for a, b in rng.integers(0, q, size=(50, 2)):
        expect = _poly.mulmod(list(F.coeffs(a)), list(F.coeffs(b)), list(F.modulus), F.p)
        assert F.coeffs(F.mul(int(a), int(b))) == tuple(expect + [0] * (F.n - len(expect)))


@pytest.mark.parametrize("q", [7, 9, 16, 25, 27, 31, 81])
def test_vectorised_ops_agree_with_scalar(q):
    F = field_of_order(q)
    a = np.arange(q)
    b = (a * 7 + 3) % q
    for op in (F.add, F.sub, F.mul):
        vec = op(a, b)
        assert [int(v) for v in vec] == [int(op(int(x), int(y))) for x, y in zip(a, b)]
    nz = a[1:]
    assert [int(v) for v in F.inv(nz)] == [F.inv(int(x)) for x in nz]
    assert [int(v) for v in F.pow(a, 5)] == [F.pow(int(x), 5) for x in a]


field_and_elements = st.sampled_from(SMALL_ORDERS).flatmap(
    lambda q: st.tuples(st.just(field_of_order(q)), st.integers(0, q - 1), st.integers(0, q - 1),
                        st.integers(0, q - 1)))


@settings(max_examples=300, deadline=None)
@given(field_and_elements)
def test_field_axioms(data):
    F, x, y, z = data
    assert F.add(x, F.neg(x)) == 0
    assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))
    assert F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z))
    assert F.sub(F.add(x, y), y) == x
    if x:
        assert F.mul(x, F.inv(x)) == 1
        assert F.pow(x, F.q - 1) == 1
    if x and y:
        assert F.dlog(F.mul(x, y)) == (F.dlog(x) + F.dlog(y)) % (F.q - 1)


@pytest.mark.parametrize("q, ell", [(11, 5), (13, 3), (16, 5), (31, 3), (64, 7), (81, 5), (271, 3), (9901, 3)])
def test_power_map_image_size(q, ell):
    F = field_of_order(q)
    xs = np.arange(1, q)
    image = np.unique(F.pow(xs, ell))
    assert image.size == (q - 1) // ell
    if F.n == 1:
        assert set(image.tolist()) == {pow(int(x), ell, q) for x in xs}


@pytest.mark.parametrize("q", [4, 8, 9, 25, 27, 49, 81, 125])
def test_trace_matches_frobenius_sum(q):
    F = field_of_order(q)
    for x in range(q):
        conj, total = x, 0
        for _ in range(F.n):
            total = F.add(total, conj)
            conj = F.pow(conj, F.p)
        assert total < F.p  # lies in the prime field
        assert int(F.trace(np.array([x]))[0]) == total


def test_construction_is_deterministic():
    a = make_field(5, 3)
    make_field.cache_clear()
    b = make_field(5, 3)
    assert a is not b
    assert a.modulus == b.modulus and a.generator == b.generator
    assert np.array_equal(a.exp, b.exp)


def test_text_encoding_round_trip():
    F = make_field(3, 2)
    assert F.format(F.element([2, 1])) == "[2,1]"
    for x in range(9):
        assert F.parse(F.format(x)) == x
    G = make_field(11)
    assert G.format(9) == "9" and G.parse("-2") == 9
    with pytest.raises(ValueError):
        G.parse("nine")


def test_prime_power_detection():
    assert prime_power(128) == (2, 7)
    assert prime_power(121) == (11, 2)
    assert prime_power(12) is None
    assert prime_power(1) is None
