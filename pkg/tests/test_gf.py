import itertools

import pytest

from steiner.gf import (
    Field,
    FieldError,
    field_make,
    find_primitive_sixth_root,
    is_prime,
    prime_power,
    smallest_irreducible,
)


def naive_mul(a, b, mod, p):
    """Schoolbook product of little-endian coefficient lists modulo a monic polynomial."""
    e = len(mod) - 1
    prod = [0] * (2 * e)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for d in range(len(prod) - 1, e - 1, -1):
        c = prod[d]
        if c:
            for i in range(e + 1):
                prod[d - e + i] = (prod[d - e + i] - c * mod[i]) % p
    return tuple(prod[:e])


def test_prime_power():
    assert prime_power(1) is None
    assert prime_power(12) is None
    assert prime_power(2) == (2, 1)
    assert prime_power(2048) == (2, 11)
    assert prime_power(6561) == (3, 8)
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize("p,e", [(2, 3), (3, 2), (2, 4), (5, 2), (3, 3)])
def test_multiplication_matches_naive(p, e):
    F = field_make(p, e)
    mod = F.reduction_poly
    assert mod == smallest_irreducible(p, e)
    for a, b in itertools.product(range(F.q), repeat=2):
        expect = naive_mul(F.coeffs(a), F.coeffs(b), mod, p)
        assert F.coeffs(F.mul(a, b)) == expect


@pytest.mark.parametrize("q", [7, 8, 9, 16, 25, 27, 49])
def test_field_axioms(q):
    F = field_make(*prime_power(q))
    one = F.one
    for a in range(q):
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == one
            assert F.pow(a, q - 1) == one
    for a, b, c in [(1, 2, 3), (q - 1, q - 2, 2), (3, 5, q - 1)]:
        a, b, c = a % q, b % q, c % q
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_prime_field_is_modular_arithmetic():
    F = field_make(19)
    for a in range(19):
        for b in range(19):
            assert F.mul(a, b) == a * b % 19
            assert F.add(a, b) == (a + b) % 19


def test_gf9_example():
    F = field_make(3, 2)
    x = F.code((0, 1))
    assert F.mul(x, x) == F.from_int(2)
    assert F.element(x) * F.element(x) == F.element(F.from_int(2))


def test_primitive_and_orders():
    F = field_make(2, 5)
    assert F.order(F.primitive) == 31
    assert sorted(F.exp(i) for i in range(31)) == list(range(1, 32))
    G = field_make(19)
    assert G.order(8) == 6


def test_frobenius_is_automorphism():
    F = field_make(2, 4)
    for a in range(16):
        for b in range(16):
            assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))
            assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))


def test_subfields():
    F = field_make(2, 6)
    for f in (1, 2, 3, 6):
        sub = F.subfield(f)
        assert len(sub) == 2**f
        assert all(F.pow(x, 2**f) == x for x in sub)
    with pytest.raises(FieldError):
        F.subfield(4)


def test_squares():
    F = field_make(23)
    assert sorted(x for x in range(1, 23) if F.is_square(x)) == sorted({x * x % 23 for x in range(1, 23)})


def test_sixth_root():
    for q in (7, 19, 31, 43):
        F = field_make(q)
        eps = find_primitive_sixth_root(F)
        assert F.order(eps.value) == 6
    with pytest.raises(FieldError):
        find_primitive_sixth_root(field_make(5))


def test_errors():
    with pytest.raises(FieldError):
        field_make(6)
    with pytest.raises(FieldError):
        field_make(2, 21)
    with pytest.raises(FieldError):
        Field(2, 3).inv(0)
