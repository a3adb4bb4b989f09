from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import W
from devlin_hopf.series import (
    Series,
    cat,
    ferfera,
    left_shift_series,
    prepend,
    shuffle,
    shuffle_power,
    shuffle_right,
    shuffle_series,
)
from devlin_hopf.words import EMPTY, X0, X1, degree

words = st.lists(st.sampled_from([X0, X1]), max_size=5).map(tuple)
small_series = st.dictionaries(words, st.integers(-3, 3), max_size=4).map(Series)


def S(**kw):
    return Series({W(k): v for k, v in kw.items()})


def test_shuffle_examples():
    assert shuffle(EMPTY, W("x0x1")) == S(x0x1=1)
    assert shuffle(W("x0"), W("x1")) == S(x0x1=1, x1x0=1)
    assert shuffle(W("x1"), W("x0x1")) == S(x1x0x1=1, x0x1x1=2)


def test_shuffle_series_examples():
    x1 = S(x1=1)
    assert shuffle_series(x1, x1) == S(x1x1=2)
    assert shuffle_series(S(e=1, x1=1), S(x0=1)) == S(x0=1, x0x1=1, x1x0=1)
    assert shuffle_series(x1, shuffle_series(x1, x1)) == S(x1x1x1=6)


def test_shuffle_power():
    assert shuffle_power(S(x1=5, x0=2), 0) == S(e=1)
    assert shuffle_power(S(x1=1), 3) == S(x1x1x1=6)
    assert shuffle_power(S(x0=1, x1=1), 2) == S(x0x0=2, x0x1=2, x1x0=2, x1x1=2)


@pytest.mark.parametrize("k", range(1, 7))
def test_factorial_identity(k):
    import math

    assert shuffle_power(S(x1=1), k) == Series({(X1,) * k: math.factorial(k)})


def test_cat():
    assert cat(S(x1=1), S(x0=1)) == S(x1x0=1)
    assert cat(S(x1=2, x0=1), S(x1=1)) == S(x1x1=2, x0x1=1)
    c = S(x1=3, x0x1=-1)
    assert cat(S(e=1), c) == c


def test_ferfera():
    assert ferfera(1) == Series({EMPTY: 1}, 1)
    assert ferfera(4).same_terms(S(e=1, x1=1, x1x1=2, x1x1x1=6))
    assert ferfera(6).coefficient(W("x1x1x1x1x1")) == 120


def test_truncation_bookkeeping():
    c = Series({W("x1x1x1"): 1, W("x1"): 1}, 3)
    assert c.words() == [W("x1")]
    with pytest.raises(ValueError):
        c.coefficient(W("x1x1x1"))
    assert (c + Series({W("x0"): 1})).truncation == 3


def test_prepend_and_left_shift():
    c = Series({W("x1"): 2, EMPTY: 1}, 2)
    p = prepend(X0, c)
    assert p.truncation == 4
    assert p.same_terms(S(x0x1=2, x0=1))
    assert left_shift_series(X0, p).same_terms(c)


def test_rejects_float_coefficients():
    with pytest.raises(TypeError):
        Series({EMPTY: 0.5})


def test_render_order():
    assert str(S(x0x1=3, x1x1x1=6, x1x0=2)) == "6*x1x1x1 + 3*x0x1 + 2*x1x0"
    assert str(Series({EMPTY: Fraction(-3, 2), W("x1"): -1})) == "-x1 - 3/2*e"
    assert str(Series()) == "0"


@settings(max_examples=60, deadline=None)
@given(words, words)
def test_left_and_right_recursions_agree(u, v):
    assert shuffle(u, v) == shuffle_right(u, v)


@settings(max_examples=60, deadline=None)
@given(words, words)
def test_shuffle_counts_and_degrees(u, v):
    import math

    s = shuffle(u, v)
    assert sum(c for _, c in s.items()) == math.comb(len(u) + len(v), len(u))
    assert all(degree(w) == degree(u) + degree(v) - 1 for w in s.words())


@settings(max_examples=40, deadline=None)
@given(small_series, small_series, small_series)
def test_shuffle_commutative_associative(a, b, c):
    assert shuffle_series(a, b) == shuffle_series(b, a)
    assert shuffle_series(shuffle_series(a, b), c) == shuffle_series(a, shuffle_series(b, c))


@settings(max_examples=40, deadline=None)
@given(small_series, small_series, small_series)
def test_shuffle_distributes(a, b, c):
    assert shuffle_series(a, b + c) == shuffle_series(a, b) + shuffle_series(a, c)


@settings(max_examples=40, deadline=None)
@given(small_series)
def test_shuffle_unit(a):
    assert shuffle_series(Series({EMPTY: 1}), a) == a


def test_shuffle_respects_max_degree():
    s = shuffle_series(S(x1x1=1), S(x0=1), max_degree=4)
    assert s.truncation == 4 and not s
