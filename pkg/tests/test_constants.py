import itertools
import json

import pytest

from weylcsm.constants import (
    StructureConstant,
    c_parabolic,
    c_ssm,
    compute_record,
    constant,
    d_csm,
    e_stable,
    euler_characteristic,
    restriction_closed_form,
)
from weylcsm.flagloc import FlagVariety
from weylcsm.io import ratfunc_from_json
from weylcsm.symfunc import RatFunc


def test_sl3_example(A2):
    a1, a2 = RatFunc.var(0, 2), RatFunc.var(1, 2)
    s1, s2 = A2.simple
    c = c_ssm(A2, s1, s2, A2.longest)
    assert c == RatFunc.constant(2, -2) / ((1 + a1) * (1 + a2) * (1 + a1 + a2))
    assert euler_characteristic(A2, s1, s2, A2.longest) == -2


def test_identity_triple(A2, B2):
    for g in (A2, B2):
        assert c_ssm(g, g.one, g.one, g.one) == 1


def test_vanishing_and_symmetry(A2):
    for u, v, w in itertools.product(A2, repeat=3):
        c = c_ssm(A2, u, v, w)
        assert c == c_ssm(A2, v, u, w)
        if not (A2.leq(u, w) and A2.leq(v, w)):
            assert c.is_zero()


def test_a1_values(A1):
    x = RatFunc.var(0, 1)
    s, one = A1.simple[0], A1.one
    assert c_ssm(A1, s, s, s) == x / (1 + x)
    # csm_Y(id) is 1 - a at id and 1 at s; csm_Y(s) is a at s
    assert d_csm(A1, one, one, one) == 1 - x
    assert d_csm(A1, one, one, s) == 1
    assert d_csm(A1, s, s, s) == x
    e = e_stable(A1, one, one, one)
    assert e.is_homogeneous(1)
    h = RatFunc.var(1, 2)
    assert e.to_ratfunc() == RatFunc.var(0, 2) - h


def test_d_diagonal_matches_restriction(A2):
    X = FlagVariety(A2)
    for u in A2:
        for w in A2:
            assert d_csm(A2, u, w, w) == X.csm_Y_restriction(u, w)
            assert c_ssm(A2, u, w, w) == restriction_closed_form(A2, u, w)


def test_reduced_word_choice(B2):
    w = B2.longest
    words = B2.reduced_words(w)
    assert len(words) == 2
    s1, s2 = B2.simple
    assert c_ssm(B2, s1, s2, w, words[0]) == c_ssm(B2, s1, s2, w, words[1])


def test_parabolic_limits(A2):
    for u, v, w in itertools.product(A2, repeat=3):
        assert c_parabolic(A2, u, v, w, ()) == c_ssm(A2, u, v, w)
    one = A2.one
    assert c_parabolic(A2, one, one, one, (1, 2)) == 1
    with pytest.raises(ValueError):
        c_parabolic(A2, A2.simple[0], one, one, (1,))


def test_constant_dispatch(A2):
    s1 = A2.simple[0]
    assert constant(A2, "ssm", s1, s1, s1) == c_ssm(A2, s1, s1, s1)
    with pytest.raises(ValueError):
        constant(A2, "csm", s1, s1, s1, (2,))
    with pytest.raises(ValueError):
        constant(A2, "quantum", s1, s1, s1)


def test_record_json_roundtrip(A2):
    s1, s2 = A2.simple
    rec = compute_record(A2, "ssm", s1, s2, A2.longest)
    assert isinstance(rec, StructureConstant)
    data = json.loads(json.dumps(rec.to_json()))
    assert data["u"] == "1" and data["w"] == "1,2,1" and data["euler_limit"] == -2
    assert ratfunc_from_json(data["value"]) == rec.value
    stable = compute_record(A2, "stable", s1, s2, A2.longest).to_json()
    assert stable["euler_limit"] is None
