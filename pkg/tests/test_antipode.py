import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import H, W
from devlin_hopf.antipode import (
    antipode,
    antipode_direct,
    antipode_generator,
    antipode_left,
    antipode_right,
    compose,
    evaluate,
    feedback,
    feedback_fixpoint,
    group_inverse,
    group_inverse_fixpoint,
    group_product,
    mod_compose,
    unity_feedback,
)
from devlin_hopf.hopf import HElement
from devlin_hopf.series import Series, ferfera
from devlin_hopf.verify import antipode_axiom_holds, berlin_sum, random_series
from devlin_hopf.words import words_of_degree, words_up_to_degree

# low-degree antipodes, written out by hand
TABLE = {
    "e": [(-1, "e")],
    "x1": [(-1, "x1")],
    "x0": [(-1, "x0"), (1, "x1 e")],
    "x1x1": [(-1, "x1x1")],
    "x0x1": [(-1, "x0x1"), (1, "x1 x1"), (1, "x1x1 e")],
    "x1x0": [(-1, "x1x0"), (1, "x1x1 e")],
    "x1x1x1": [(-1, "x1x1x1")],
    "x0x0": [(-1, "x0x0"), (1, "x1 x0"), (1, "x1x0 e"), (1, "x0x1 e"), (-1, "x1 x1 e"), (-1, "x1x1 e e")],
}


def S(**kw):
    return Series({W(k): v for k, v in kw.items()})


@pytest.mark.parametrize("word", sorted(TABLE))
@pytest.mark.parametrize("route", [antipode_left, antipode_right])
def test_antipode_table(word, route):
    assert route(W(word)) == H(*TABLE[word])


def test_antipode_of_unit():
    assert antipode(HElement.unit()) == HElement.unit()


def test_direct_route_examples():
    assert antipode_direct(W("x1")) == H((-1, "x1"))
    assert antipode_direct(W("x0")) == H((-1, "x0"), (1, "x1 e"))
    assert antipode_direct(W("x0x1")) == H(*TABLE["x0x1"])
    with pytest.raises(ValueError):
        antipode_direct(())
    assert antipode_generator((), "direct") == H((-1, "e"))


@pytest.mark.parametrize("n", range(2, 9))
def test_three_routes_agree(n):
    for w in words_of_degree(n):
        left = antipode_left(w)
        assert antipode_right(w) == left
        assert antipode_direct(w) == left


@pytest.mark.parametrize("w", words_up_to_degree(7))
def test_antipode_axiom(w):
    assert antipode_axiom_holds(w)


def test_antipode_is_an_involution():
    # H is commutative, so S o S = id
    for w in words_up_to_degree(6):
        assert antipode(antipode_left(w)) == HElement.gen(w)


def test_unknown_method():
    with pytest.raises(ValueError):
        antipode_generator(W("x1"), "sideways")


@pytest.mark.parametrize("w", words_up_to_degree(7))
def test_coefficient_sum_vanishes_after_x0(w):
    assert berlin_sum(w) == 0


def test_evaluate():
    minus_c = -ferfera(6)
    assert evaluate(HElement.unit(), minus_c) == 1
    assert evaluate(H((1, "x1 e")), minus_c) == 1
    assert evaluate(antipode_left(W("x0x1")), minus_c) == 3
    assert evaluate(antipode_left(W("x1x0")), minus_c) == 2
    assert evaluate(antipode_left(W("x1x1x1")), minus_c) == 6


def test_evaluate_refuses_words_beyond_truncation():
    with pytest.raises(ValueError):
        evaluate(H((1, "x1x1x1")), ferfera(3))


def test_compose_examples():
    d = S(x1=7, x0=-2)
    assert compose(S(e=5), d, 6).same_terms(S(e=5))
    assert compose(S(x1=1), S(x1=1), 4).same_terms(S(x0x1=1))
    assert compose(S(x1x1=1), S(x1=1), 8).same_terms(S(x0x1x0x1=1, x0x0x1x1=2))
    # both words have degree >= 7, so nothing survives at N = 6
    assert not compose(S(x1x1=1), S(x1=1), 6)


def test_mod_compose_examples():
    c = random_series(random.Random(3), 6)
    assert mod_compose(c, Series.zero(6), 6).same_terms(c)
    assert mod_compose(S(x1=1), S(x1=1), 4).same_terms(S(x1=1, x0x1=1))
    assert mod_compose(S(e=1), S(x1=4, x0=1), 6).same_terms(S(e=1))


def test_group_inverse_examples():
    inv = group_inverse(-ferfera(4), 4)
    assert inv.homogeneous(4).same_terms(S(x0x1=3, x1x0=2, x1x1x1=6))
    assert group_inverse(-ferfera(3), 3).homogeneous(3).same_terms(S(x1x1=2, x0=1))
    assert not group_inverse(Series.zero(5), 5)
    assert inv.same_terms(group_inverse_fixpoint(-ferfera(4), 4))


def test_group_inverse_fixpoint_examples():
    assert not group_inverse_fixpoint(Series.zero(5), 5)
    d = group_inverse_fixpoint(S(x1=1), 4)
    assert d.coefficient(W("x1")) == -1 and d.coefficient(W("x0x1")) == 1


@pytest.mark.parametrize("method", ["left", "right", "direct"])
def test_group_inverse_methods_agree(method):
    c = random_series(random.Random(7), 7)
    assert group_inverse(c, 7, method).same_terms(group_inverse_fixpoint(c, 7))


def test_feedback_examples():
    c = random_series(random.Random(5), 6)
    assert feedback(c, Series.zero(6), 6).same_terms(c)
    # with this sign convention the first feedback correction of (x1, x1) is x0x0x1, of degree 6
    assert feedback(S(x1=1), S(x1=1), 4).same_terms(S(x1=1))
    assert feedback(S(x1=1), S(x1=1), 6).same_terms(S(x1=1, x0x0x1=1))
    assert feedback(S(x1=1), S(x1=1), 6).same_terms(feedback_fixpoint(S(x1=1), S(x1=1), 6))


def test_unity_feedback_examples():
    assert not unity_feedback(Series.zero(5), 5)
    assert unity_feedback(S(x1=1), 5).same_terms(S(x1=1, x0x1=1))
    assert unity_feedback(S(x1=1), 9).same_terms(S(x1=1, x0x1=1, x0x0x1=1, x0x0x0x1=1))
    assert unity_feedback(ferfera(4), 4).homogeneous(4).same_terms(S(x1x1x1=6, x0x1=3, x1x0=2))


def test_unity_feedback_is_a_fixed_point():
    c = random_series(random.Random(11), 6)
    e = unity_feedback(c, 6)
    assert e.same_terms(mod_compose(c, e, 6))


coeffs = st.integers(-3, 3)


@st.composite
def series6(draw):
    return Series({w: draw(coeffs) for w in words_up_to_degree(6)}, 6)


@settings(max_examples=15, deadline=None)
@given(series6(), series6(), series6())
def test_group_axioms(c, d, e):
    zero = Series.zero(6)
    assert group_product(c, zero, 6) == c == group_product(zero, c, 6)
    inv = group_inverse(c, 6)
    assert not group_product(c, inv, 6)
    assert not group_product(inv, c, 6)
    assert group_product(group_product(c, d, 6), e, 6) == group_product(c, group_product(d, e, 6), 6)


@settings(max_examples=10, deadline=None)
@given(series6(), series6())
def test_feedback_matches_fixpoint(c, d):
    assert feedback(c, d, 6).same_terms(feedback_fixpoint(c, d, 6))


@settings(max_examples=20, deadline=None)
@given(series6())
def test_evaluate_is_a_character(c):
    a, b = antipode_left(W("x0x1")), H((1, "x1"), (Fraction(1, 2), "e"))
    assert evaluate(a * b, c) == evaluate(a, c) * evaluate(b, c)
