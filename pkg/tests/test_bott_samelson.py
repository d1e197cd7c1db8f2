import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weylcsm.bott_samelson import BSClass, BottSamelson, compress
from weylcsm.cartan import CartanDatum
from weylcsm.symfunc import RatFunc
from weylcsm.weyl import Subword

A1 = CartanDatum.from_type("A1")
A2 = CartanDatum.from_type("A2")
B2 = CartanDatum.from_type("B2")


def al(n=1):
    return RatFunc.var(0, n)


def test_tangent_weights_examples():
    assert BottSamelson(A1, (1,)).tangent_weights(0) == [(-1,)]
    assert BottSamelson(A1, (1,)).tangent_weights(1) == [(1,)]
    assert BottSamelson(A2, (1, 2)).tangent_weights(Subword.from_string((1, 2), "10")) == [(1, 0), (-1, -1)]


def test_dual_restriction_examples():
    assert BottSamelson(A1, ()).dual_restriction(0, 0) == 1
    bs = BottSamelson(A1, (1,))
    x = al()
    assert bs.dual_restriction(1, 1) == x / (1 + x)
    assert bs.dual_restriction(0, 1) == 1 / (1 + x)
    assert bs.dual_restriction(1, 0).is_zero()


def test_csm_bs_restriction_examples():
    x = al()
    assert BottSamelson(A1, ()).csm_bs_restriction(0, 0) == 1
    bs = BottSamelson(A1, (1,))
    assert bs.csm_bs_restriction(1, 0) == 1 - x
    assert bs.csm_bs_restriction(0, 0) == -x
    assert bs.csm_bs_restriction(0, 1).is_zero()


def test_b_examples():
    x = al()
    assert BottSamelson(A1, ()).b_formula(0, 0) == 1
    assert BottSamelson(A1, ()).b_recursion(0, 0) == 1
    bs = BottSamelson(A1, (1,))
    assert bs.b_formula(1, 1) == x / (1 + x) == bs.b_recursion(1, 1)
    bs2 = BottSamelson(A2, (1, 2))
    assert bs2.b_formula(0b01, 0b10) == bs2.b_recursion(0b01, 0b10)


def test_two_subwords_give_equal_b():
    bs = BottSamelson(A2, (1, 2, 1))
    a1, a2 = RatFunc.var(0, 2), RatFunc.var(1, 2)
    each = RatFunc.constant(2, -1) / ((1 + a1) * (1 + a2) * (1 + a1 + a2))
    r1, r2, s = Subword.from_string((1, 2, 1), "100"), Subword.from_string((1, 2, 1), "001"), 0b010
    assert bs.b_formula(r1, s) == each
    assert bs.b_formula(r2, s) == each
    assert bs.b_memo(r1, s) == each


@given(st.lists(st.integers(1, 2), max_size=5), st.data())
def test_formula_recursion_symmetry(word, data):
    bs = BottSamelson(B2, word)
    r = data.draw(st.integers(0, bs.full))
    s = data.draw(st.integers(0, bs.full))
    f = bs.b_formula(r, s)
    assert f == bs.b_recursion(r, s)
    assert f == bs.b_formula(s, r)
    assert f == bs.b_memo(r, s)


@given(st.lists(st.integers(1, 3), min_size=0, max_size=5), st.data())
def test_reduced_step_identity(word, data):
    bs = BottSamelson(CartanDatum.from_type("B3"), word)
    j = data.draw(st.integers(0, bs.full))
    s = data.draw(st.integers(0, bs.full)) & j
    assert bs.reduced_step_identity(s, j) == 1


def test_reduced_step_hand_case():
    bs = BottSamelson(A1, (1,))
    assert bs.reduced_step_identity(0, 0) == 1
    assert bs.reduced_step_identity(0, 1) == 1
    with pytest.raises(ValueError):
        bs.reduced_step_identity(1, 0)


@pytest.mark.parametrize("word", [(), (1,), (1, 2), (1, 1), (2, 1, 2), (1, 2, 1, 2)])
def test_duality_with_open_cells(word):
    bs = BottSamelson(B2, word)
    for s in range(bs.full + 1):
        t = bs.dual_class(s)
        for j in range(bs.full + 1):
            assert bs.bs_pairing(t, bs.cell_class(j)) == (1 if s == j else 0)
            assert bs.bs_pairing(t, bs.closure_class(j)) == (0 if s & ~j else 1)


def test_pairing_symmetric_and_empty():
    bs = BottSamelson(A2, (1, 2, 2))
    g1, g2 = bs.dual_class(0b011), bs.closure_class(0b110)
    assert bs.bs_pairing(g1, g2) == bs.bs_pairing(g2, g1)
    e = BottSamelson(A2, ())
    c1 = BSClass((), {0: RatFunc.constant(2, 3)})
    c2 = BSClass((), {0: RatFunc.constant(2, 5)})
    assert e.bs_pairing(c1, c2) == 15


@given(st.lists(st.integers(1, 2), min_size=1, max_size=5), st.data())
def test_first_letter_peeling(word, data):
    bs = BottSamelson(B2, word)
    r = data.draw(st.integers(0, bs.full))
    s = data.draw(st.integers(0, bs.full))
    assert bs.peel_first_letter(s, r) == bs.dual_restriction(s, r)


def test_bsclass_json_keys():
    bs = BottSamelson(A2, (1, 2))
    data = bs.dual_class(0b01).to_json()
    assert sorted(data) == ["00", "01", "10", "11"]
    assert data["00"]["num"] == []


def test_compress_and_bounds():
    assert compress(0b1010, 0b1110) == 0b101 >> 0 & 0b101
    assert compress(0b100, 0b101) == 0b10
    with pytest.raises(ValueError):
        BottSamelson(A2, (1, 3))
    with pytest.raises(ValueError):
        BottSamelson(A2, (1,)).dual_restriction(0b10, 0b11)


def test_aggregation_small():
    from weylcsm.constants import c_ssm
    from weylcsm.weyl import WeylGroup

    g = WeylGroup(A2)
    w = g.longest
    q = g.word(w)
    bs = BottSamelson(A2, q)
    s1, s2 = g.simple
    total = RatFunc.zero(2)
    for r, s in itertools.product(range(bs.full + 1), repeat=2):
        pr = g.element([x for k, x in enumerate(q) if (r >> k) & 1])
        ps = g.element([x for k, x in enumerate(q) if (s >> k) & 1])
        if pr == s1 and ps == s2:
            total = total + bs.b_formula(r, s)
    assert total == c_ssm(g, s1, s2, w)
