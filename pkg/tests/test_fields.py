import random
from fractions import Fraction
from itertools import product

import pytest

from galoiscoh import (FieldAut, apply_aut, cyclotomic_field, finite_field, galois_group,
                       primitive_element, rationals, units_dictionary, units_table)
from galoiscoh import linalg
from galoiscoh.fields import cyclotomic_polynomial, identity_aut, least_irreducible
from oracles import group_type_by_orders

FINITE = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (5, 2), (7, 2)]
CYCLO = [1, 3, 4, 5, 8, 12]


def all_fields():
    return [finite_field(p, n) for p, n in FINITE] + [cyclotomic_field(N) for N in CYCLO]


def sample(F, r, k=20):
    if F.is_finite:
        elems = F.elements()
        return [r.choice(elems) for _ in range(k)]
    return [F.element([Fraction(r.randint(-9, 9), r.randint(1, 5)) for _ in range(F.degree)])
            for _ in range(k)]


def _poly_divides(d, f, p):
    f = list(f)
    while len(f) >= len(d) and any(f):
        if f[-1] % p == 0:
            f.pop()
            continue
        c = f[-1] * pow(d[-1], -1, p) % p
        shift = len(f) - len(d)
        for i, di in enumerate(d):
            f[shift + i] = (f[shift + i] - c * di) % p
        f.pop()
    return not any(x % p for x in f)


@pytest.mark.parametrize("p,n", FINITE)
def test_modulus_is_least_irreducible(p, n):
    m = least_irreducible(p, n)
    assert len(m) == n + 1 and m[-1] == 1

    def irreducible(f):
        deg = len(f) - 1
        for dd in range(1, deg // 2 + 1):
            for cs in product(range(p), repeat=dd):
                if _poly_divides(list(cs) + [1], f, p):
                    return False
        return True

    assert irreducible(m)
    # nothing smaller in the (c0, ..., c_{n-1}) lexicographic order is irreducible
    for cs in product(range(p), repeat=n):
        if cs < m[:-1]:
            assert not irreducible(cs + (1,))


def test_modulus_choices():
    assert least_irreducible(2, 3) == (1, 0, 1, 1)
    assert least_irreducible(2, 2) == (1, 1, 1)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(5) == (1, 1, 1, 1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_basic_arithmetic():
    F4 = finite_field(2, 2)
    x = F4.gen
    assert x * x == x + F4.one
    Qi = cyclotomic_field(4)
    i = Qi.gen
    assert (Qi.one + i) * (Qi.one - i) == Qi.scalar(2)
    assert i * i == -Qi.one
    Q = rationals()
    assert Q.scalar(Fraction(1, 3)) * 3 == Q.one


@pytest.mark.parametrize("F", all_fields(), ids=repr)
def test_inverses_and_ring_laws(F):
    r = random.Random(1)
    xs = sample(F, r)
    for a in xs:
        if a:
            assert a * a.inverse() == F.one
    for a, b, c in zip(xs, xs[1:], xs[2:]):
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
    with pytest.raises(ZeroDivisionError):
        F.zero.inverse()


def test_automorphism_examples():
    F4 = finite_field(2, 2)
    frob = FieldAut(F4, 1)
    assert apply_aut(frob, F4.gen) == F4.gen + F4.one
    Qi = cyclotomic_field(4)
    assert apply_aut(FieldAut(Qi, 3), Qi.gen) == -Qi.gen
    r = random.Random(4)
    for F in all_fields():
        e = identity_aut(F)
        assert all(e(a) == a for a in sample(F, r))


@pytest.mark.parametrize("F", all_fields(), ids=repr)
def test_automorphisms_are_field_maps(F):
    G, auts = galois_group(F)
    r = random.Random(2)
    xs = sample(F, r, 10)
    for g in auts:
        assert g(F.one) == F.one
        for a, b in zip(xs, xs[1:]):
            assert g(a * b) == g(a) * g(b)
            assert g(a + b) == g(a) + g(b)
        for c in range(-3, 4):
            assert g(F.scalar(c)) == F.scalar(c)
    # dictionary respects composition, exhaustively
    for a in G.elements():
        for b in G.elements():
            assert auts[a].compose(auts[b]) == auts[G.mul(a, b)]
            for x in xs[:3]:
                assert auts[a](auts[b](x)) == auts[G.mul(a, b)](x)


def test_galois_group_shapes():
    G, _ = galois_group(finite_field(2, 4))
    assert group_type_by_orders(G.table) == {1: 1, 2: 1, 4: 2}
    G, _ = galois_group(cyclotomic_field(4))
    assert G.order == 2
    G, auts = galois_group(cyclotomic_field(5))
    assert group_type_by_orders(G.table) == {1: 1, 2: 1, 4: 2}
    two = next(i for i, a in enumerate(auts) if a.k == 2)
    assert G.element_order(two) == 4


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (3, 2), (5, 2), (2, 4)])
def test_fixed_field_is_prime_field(p, n):
    F = finite_field(p, n)
    K = F.base_field()
    frob = FieldAut(F, 1) if n > 1 else identity_aut(F)
    basis = [F.element([0] * i + [1]) for i in range(n)]
    cols = [(frob(b) - b).base_coords() for b in basis]
    rows = [[cols[j][i] for j in range(n)] for i in range(n)]
    fixed = linalg.nullspace(rows, n, K.zero, K.one)
    assert len(fixed) == 1
    assert F.element([c.coeffs[0] for c in fixed[0]]) in {F.scalar(c) for c in range(1, p)}


def test_units_dictionary_examples():
    F4 = finite_field(2, 2)
    assert primitive_element(F4) == F4.gen
    M, table = units_dictionary(F4)
    assert table.exp(1) == F4.gen and table.exp(2) == F4.gen + F4.one
    frob = FieldAut(F4, 1)
    for k in range(3):
        assert table.exp(2 * k) == frob(table.exp(k))
    F2 = finite_field(2, 1)
    assert units_table(F2).powers == (F2.one,)
    F8 = finite_field(2, 3)
    assert F8.modulus == (1, 0, 1, 1)


@pytest.mark.parametrize("p,n", [(p, n) for p, n in FINITE if p ** n <= 64])
def test_units_dictionary_is_isomorphism(p, n):
    F = finite_field(p, n)
    t = units_table(F)
    q1 = p ** n - 1
    assert len(set(t.powers)) == q1
    for a in range(q1):
        for b in range(q1):
            assert t.exp(a + b) == t.exp(a) * t.exp(b)
        assert t.log(t.exp(a)) == a
    with pytest.raises(ValueError):
        t.log(F.zero)


def test_invalid_specs():
    with pytest.raises(ValueError):
        finite_field(4, 1)
    with pytest.raises(ValueError):
        FieldAut(cyclotomic_field(8), 2)
    with pytest.raises(ValueError):
        FieldAut(finite_field(2, 2), 2)
