import itertools

import pytest
from hypothesis import given, settings, strategies as st

from omeganorm.perm import (GroupError, OrderCapExceeded, Permutation, compose, conjugate,
                            element_order, group_from_generators, inverse)

from conftest import cyc

ID3 = Permutation.identity(3)


def test_composition_order_is_left_then_right():
    a, b = cyc((0, 1), n=3), cyc((1, 2), n=3)
    # 0 -(0 1)-> 1 -(1 2)-> 2, so compose(a, b) sends 0 to 2
    assert compose(a, b).images == (2, 0, 1)
    assert compose(a, b) == cyc((0, 2, 1), n=3)
    assert compose(b, a) == cyc((0, 1, 2), n=3)
    assert compose(a, b) != compose(b, a)
    assert a * b == compose(a, b)


@pytest.mark.parametrize("a, b, expected", [
    (cyc((0, 1), n=3), cyc((0, 1), n=3), ID3),
    (ID3, cyc((0, 2), n=3), cyc((0, 2), n=3)),
    (cyc((0, 1, 2), n=3), cyc((0, 1, 2), n=3), cyc((0, 2, 1), n=3)),
])
def test_compose_examples(a, b, expected):
    assert compose(a, b) == expected


def test_compose_degree_mismatch():
    with pytest.raises(GroupError):
        compose(Permutation.identity(2), Permutation.identity(3))
    with pytest.raises(GroupError):
        conjugate(Permutation.identity(2), Permutation.identity(3))


@pytest.mark.parametrize("a, expected", [
    (ID3, ID3),
    (cyc((0, 1), n=3), cyc((0, 1), n=3)),
    (cyc((0, 1, 2), n=3), cyc((0, 2, 1), n=3)),
])
def test_inverse_examples(a, expected):
    assert inverse(a) == expected
    assert compose(a, inverse(a)).is_identity()


def test_conjugate_examples():
    h = cyc((0, 1), n=3)
    assert conjugate(h, ID3) == h
    assert conjugate(h, h) == h
    assert conjugate(h, cyc((0, 1, 2), n=3)) == cyc((1, 2), n=3)


@pytest.mark.parametrize("g, order", [
    (Permutation.identity(5), 1),
    (cyc((0, 1), n=5), 2),
    (cyc((0, 1, 2), (3, 4), n=5), 6),
])
def test_element_order(g, order):
    assert element_order(g) == order
    p = g
    for _ in range(order - 1):
        p = compose(p, g)
    assert p.is_identity()


def test_permutation_validation():
    with pytest.raises(GroupError):
        Permutation([0, 0, 1])
    with pytest.raises(GroupError):
        Permutation([])
    with pytest.raises(GroupError):
        Permutation.from_cycles([(0, 5)], 3)


def test_cycle_string():
    assert str(cyc((0, 2, 1), (3, 4), n=5)) == "(0 2 1)(3 4)"
    assert str(Permutation.identity(4)) == "()"


@pytest.mark.parametrize("gens, degree, order", [
    ([], 3, 1),
    ([cyc((0, 1), n=3), cyc((0, 1, 2), n=3)], 3, 6),
    ([cyc((0, 1, 2, 3, 4), n=5), cyc((0, 1, 2), n=5)], 5, 60),
])
def test_group_from_generators(gens, degree, order):
    G = group_from_generators("G", degree, gens)
    assert G.order == order
    assert G.elements[0].is_identity()
    assert list(G.elements) == sorted(G.elements)
    for g in gens:
        assert g in G


def test_order_cap_is_explicit():
    gens = [cyc((0, 1), n=5), cyc((0, 1, 2, 3, 4), n=5)]
    with pytest.raises(OrderCapExceeded, match="order cap exceeded"):
        group_from_generators("S5", 5, gens, max_order=100)
    assert group_from_generators("S5", 5, gens, max_order=120).order == 120


def test_generator_degree_checked():
    with pytest.raises(GroupError):
        group_from_generators("bad", 4, [cyc((0, 1), n=3)])


def test_enumeration_is_deterministic():
    gens = [cyc((0, 1, 2, 3), n=4), cyc((0, 1), n=4)]
    a = group_from_generators("S4", 4, gens)
    b = group_from_generators("S4", 4, list(reversed(gens)))
    assert a.elements == b.elements


def test_product_table_matches_compose(groups):
    for name in ("S4", "Q16", "D8xC3"):
        G = groups[name]
        for i, j in itertools.product(range(0, G.order, 3), range(0, G.order, 5)):
            assert G.elements[G.mul(i, j)] == compose(G.elements[i], G.elements[j])
        for i in range(G.order):
            assert G.mul(i, G.inverses[i]) == 0


def test_untabulated_products_agree(monkeypatch, groups):
    import omeganorm.perm as perm
    monkeypatch.setattr(perm, "TABLE_LIMIT", 0)
    G = group_from_generators("A5", 5, groups["A5"].generators)
    assert G.table is None
    T = groups["A5"]
    for i in range(0, 60, 7):
        for j in range(60):
            assert G.mul(i, j) == T.mul(i, j)


triples = st.tuples(st.integers(0, 119), st.integers(0, 119), st.integers(0, 119))


@settings(max_examples=200, deadline=None)
@given(triples)
def test_group_axioms(groups, ijk):
    G = groups["S5"]
    a, b, c = (G.elements[i] for i in ijk)
    assert compose(compose(a, b), c) == compose(a, compose(b, c))
    assert compose(a, inverse(a)).is_identity()
    assert conjugate(a, b) in G


@settings(max_examples=100, deadline=None)
@given(st.permutations(range(6)), st.permutations(range(6)))
def test_conjugate_is_homomorphism(h, g):
    h, g = Permutation(h), Permutation(g)
    assert conjugate(compose(h, h), g) == compose(conjugate(h, g), conjugate(h, g))
    assert conjugate(conjugate(h, g), inverse(g)) == h
