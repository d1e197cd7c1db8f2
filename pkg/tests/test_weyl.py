import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weylcsm.cartan import CartanDatum
from weylcsm.weyl import (
    Subword,
    WeylError,
    WeylGroup,
    bruhat_leq,
    demazure_product,
    format_word,
    minimal_representatives,
    multiply,
    parse_word,
    reduced_word,
    subwords_with_product,
    word_product,
)


@pytest.mark.parametrize("name, size", [("A1", 2), ("A2", 6), ("B2", 8), ("G2", 12), ("A3", 24), ("B3", 48)])
def test_group_sizes(name, size):
    g = WeylGroup.of_type(name)
    assert len(g) == size
    assert g.longest.length == g.datum.dim_gb


def test_multiply_examples(A2):
    s1, s2 = A2.simple
    assert multiply(s1, s1).is_identity
    assert multiply(multiply(s1, s2), s1) == multiply(multiply(s2, s1), s2)
    assert multiply(s1, s2).length == 2


def test_multiply_mismatched():
    with pytest.raises(WeylError):
        multiply(WeylGroup.of_type("A2").simple[0], WeylGroup.of_type("B2").simple[0])


def test_reduced_word_examples(A2, B2):
    assert reduced_word(A2.one) == ()
    assert len(reduced_word(A2.longest)) == 3
    assert word_product(A2.datum, reduced_word(A2.longest)) == A2.longest
    assert len(reduced_word(B2.longest)) == 4


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3"])
def test_reduced_words_roundtrip(name):
    g = WeylGroup.of_type(name)
    for w in g:
        q = g.word(w)
        assert len(q) == w.length
        assert g.element(q) == w
        for other in g.reduced_words(w):
            assert g.element(other) == w and len(other) == w.length


def _subword_leq(g, u, w):
    q = g.word(w)
    return any(
        g.element([x for x, b in zip(q, mask) if b]) == u for mask in itertools.product((0, 1), repeat=len(q))
    )


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_bruhat_matches_subword_property(name):
    g = WeylGroup.of_type(name)
    for u in g:
        for w in g:
            assert bruhat_leq(u, w) == _subword_leq(g, u, w) == g.leq(u, w)


def test_bruhat_examples(A2):
    s1, s2 = A2.simple
    assert all(bruhat_leq(A2.one, w) and bruhat_leq(w, w) for w in A2)
    assert not bruhat_leq(s1, s2)


def test_subwords_with_product_examples(A2):
    s1, s2 = A2.simple
    assert [str(s) for s in subwords_with_product(A2.datum, (1, 2, 1), s1)] == ["001", "100"]
    assert [str(s) for s in subwords_with_product(A2.datum, (1, 2, 1), s2)] == ["010"]
    assert "000" in [str(s) for s in subwords_with_product(A2.datum, (1, 2, 1), A2.one)]


@given(st.lists(st.integers(1, 2), max_size=7), st.data())
def test_subwords_exhaustive(word, data):
    g = WeylGroup.of_type("B2")
    target = data.draw(st.sampled_from(g.elements))
    got = [s.mask for s in subwords_with_product(g.datum, word, target)]
    expected = [
        m for m in itertools.product((0, 1), repeat=len(word)) if g.element([x for x, b in zip(word, m) if b]) == target
    ]
    assert got == sorted(expected)


def test_demazure_examples(A2):
    s1 = A2.simple[0]
    assert demazure_product(A2.datum, (1, 1)) == s1
    assert demazure_product(A2.datum, (1, 2, 1, 2)) == A2.longest
    for w in A2:
        assert demazure_product(A2.datum, A2.word(w)) == w


@given(st.lists(st.integers(1, 3), max_size=8), st.integers(1, 3))
def test_demazure_absorbs_descents(word, i):
    d = CartanDatum.from_type("A3")
    w = demazure_product(d, word)
    if w.has_right_descent(i):
        assert demazure_product(d, word + [i]) == w
    else:
        assert demazure_product(d, word + [i]).length == w.length + 1


def test_minimal_representatives(A2, A3):
    assert minimal_representatives(A2.datum, ()) == A2.elements
    assert minimal_representatives(A2.datum, (1, 2)) == [A2.one]
    reps = {format_word(A2.word(w)) for w in minimal_representatives(A2.datum, (1,))}
    assert reps == {"", "2", "1,2"}
    for par in [(1,), (2,), (1, 3), (1, 2)]:
        assert len(A3.minimal_representatives(par)) * len(A3.parabolic_subgroup(par)) == len(A3)
    w = A3.longest
    rep = A3.minimal_representative(w, (1, 3))
    assert rep in A3.minimal_representatives((1, 3))


def test_parse_word():
    assert parse_word("1,2,1") == (1, 2, 1)
    assert parse_word("121") == (1, 2, 1)
    assert parse_word("") == parse_word("id") == ()
    with pytest.raises(WeylError, match="position"):
        parse_word("1,x", 2)
    with pytest.raises(WeylError):
        parse_word("3", 2)


def test_subword_helpers():
    s = Subword.from_string((1, 2, 1), "101")
    assert s.positions == (0, 2)
    assert s.letters == (1, 1)
    assert s.bits == 0b101
    assert Subword.from_bits((1, 2, 1), 0b101) == s
    with pytest.raises(WeylError):
        Subword((1, 2), (1,))


@given(st.lists(st.integers(1, 3), max_size=10))
def test_length_is_inversion_count(word):
    g = WeylGroup.of_type("A3")
    w = g.element(word)
    inv = sum(1 for b in g.datum.positive_roots if any(x < 0 for x in w.act(b)))
    assert w.length == inv
    assert g.element(reduced_word(w)) == w
    assert multiply(w, w.inverse()).is_identity
