import pytest
from hypothesis import given
from hypothesis import strategies as st

from galoiscoh import (FiniteGroup, GroupAxiomError, GroupHom, HomomorphismError,
                       direct_product, make_cyclic, make_hom, units_group, validate_hom)
from galoiscoh.groups import enumerate_tuples, projections, tuple_index
from oracles import group_type_by_orders


def test_make_cyclic():
    assert make_cyclic(1).order == 1
    assert make_cyclic(2).table == ((0, 1), (1, 0))
    assert make_cyclic(4).element_order(1) == 4


def test_direct_products():
    V = direct_product(make_cyclic(2), make_cyclic(2))
    assert all(V.mul(a, a) == 0 for a in V.elements())
    assert group_type_by_orders(V.table) == {1: 1, 2: 3}
    G = make_cyclic(5)
    assert direct_product(G, make_cyclic(1)).table == G.table
    C6 = direct_product(make_cyclic(2), make_cyclic(3))
    assert C6.element_order(1 * 3 + 1) == 6
    for p in projections(make_cyclic(2), make_cyclic(3)):
        validate_hom(p)


@pytest.mark.parametrize("table", [
    ((0, 1), (1, 1)),                 # no inverse for 1
    ((1, 0), (0, 1)),                 # 0 is not the identity
    ((0, 1, 2), (1, 2, 0), (2, 1, 0)),  # not a latin square
    ((0, 1, 2), (1, 0, 2), (2, 2, 0)),
    ((0, 1), (1, 2)),                 # out of range
    ((0, 1), (1,)),                   # ragged
])
def test_corrupted_tables_rejected(table):
    with pytest.raises(GroupAxiomError):
        FiniteGroup(table)


def test_non_associative_latin_square_rejected():
    # a loop of order 5 that is not a group
    table = ((0, 1, 2, 3, 4),
             (1, 0, 3, 4, 2),
             (2, 4, 0, 1, 3),
             (3, 2, 4, 0, 1),
             (4, 3, 1, 2, 0))
    with pytest.raises(GroupAxiomError):
        FiniteGroup(table)


@given(st.integers(1, 12), st.integers(0, 11), st.integers(0, 11), st.integers(0, 11))
def test_cyclic_group_laws(n, a, b, c):
    G = make_cyclic(n)
    a, b, c = a % n, b % n, c % n
    assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
    assert G.mul(a, G.inverse[a]) == 0
    assert G.power(a, n) == 0


def test_homomorphisms():
    C4, C2 = make_cyclic(4), make_cyclic(2)
    validate_hom(GroupHom(C4, C4, (0, 1, 2, 3)))
    validate_hom(GroupHom(C4, C2, (0, 1, 0, 1)))
    with pytest.raises(HomomorphismError) as info:
        validate_hom(GroupHom(C4, C4, (0, 2, 2, 3)))
    assert info.value.violations
    a, b = info.value.violations[0]
    f = (0, 2, 2, 3)
    assert f[C4.mul(a, b)] != C4.mul(f[a], f[b])
    g = make_hom(C4, C2, (0, 1, 0, 1))
    assert GroupHom(C2, C2, (0, 1)).compose(g).images == (0, 1, 0, 1)
    with pytest.raises(ValueError):
        g.compose(g)


def test_enumerate_tuples():
    C2, C3 = make_cyclic(2), make_cyclic(2 + 1)
    assert list(enumerate_tuples(C2, 2)) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert list(enumerate_tuples(C3, 0)) == [()]
    assert list(enumerate_tuples(C3, 1)) == [(0,), (1,), (2,)]
    ts = list(enumerate_tuples(C3, 3))
    assert len(ts) == 27 and ts == sorted(set(ts))
    assert [tuple_index(t, 3) for t in ts] == list(range(27))


def test_units_group():
    G, res = units_group(5)
    assert res == [1, 2, 3, 4]
    assert G.order == 4 and G.element_order(res.index(2)) == 4
    G8, _ = units_group(8)
    assert group_type_by_orders(G8.table) == {1: 1, 2: 3}
    G1, res1 = units_group(1)
    assert G1.order == 1
