"""Antipodes of the output feedback Hopf algebra and the feedback group products.

Three independent antipode routes are provided:

* :func:`antipode_left` / :func:`antipode_right`: the standard recursions over
  the reduced coproduct.
* :func:`antipode_direct`: the right-augmentation formula
  ``S a_w = (-1)^{|w|-1} theta'_{i_l} ... theta'_{i_1} (a_e)`` which needs no
  coproduct at all.

Series are treated as characters: a monomial a_{w1}...a_{wk} evaluates to the
product of the coefficients <c, w_j>, and the unit 1 evaluates to 1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .hopf import (
    HElement,
    Monomial,
    h_mul,
    kappa,
    linear_map,
    reduced_coproduct,
    tilde_theta,
)
from .series import Series, _min_trunc, prepend, shuffle_series
from .words import EMPTY, X0, X1, Word, degree, words_up_to_degree


def evaluate(h: HElement, c: Series) -> Fraction:
    """Evaluate h on the group element delta + c."""
    total = Fraction(0)
    for m, k in h.items():
        v = Fraction(k)
        for w in m:
            v *= c.coefficient(w)
            if not v:
                break
        total += v
    return total


def _antipode_of_monomial(m: Monomial, gen: Callable[[Word], HElement]) -> HElement:
    out = HElement.unit()
    for w in m:
        out = h_mul(out, gen(w))
    return out


@lru_cache(maxsize=None)
def antipode_left(eta: Word) -> HElement:
    """S a_eta = -a_eta - sum' S(a_(1)) a_(2)."""
    eta = tuple(eta)
    out = -HElement.gen(eta)
    for (m1, m2), c in reduced_coproduct(eta).items():
        # the left slot is a single coordinate function of lower degree
        out = out - h_mul(antipode_left(m1[0]), HElement.mono(*m2)) * c
    return out


@lru_cache(maxsize=None)
def antipode_right(eta: Word) -> HElement:
    """S a_eta = -a_eta - sum' a_(1) S(a_(2))."""
    eta = tuple(eta)
    out = -HElement.gen(eta)
    for (m1, m2), c in reduced_coproduct(eta).items():
        s2 = _antipode_of_monomial(m2, antipode_right)
        out = out - h_mul(HElement.mono(*m1), s2) * c
    return out


def _theta_prime(i: int, h: HElement) -> HElement:
    if i == X1:
        return -tilde_theta(X1, h)
    return -tilde_theta(X0, h) + kappa(EMPTY, tilde_theta(X1, h))


@lru_cache(maxsize=None)
def antipode_direct(eta: Word) -> HElement:
    eta = tuple(eta)
    if not eta:
        raise ValueError("antipode_direct covers nonempty words only; S a_e = -a_e")
    h = _theta_prime(eta[-1], _unsigned_direct(eta[:-1]))
    return h if len(eta) % 2 == 1 else -h


@lru_cache(maxsize=None)
def _unsigned_direct(eta: Word) -> HElement:
    if not eta:
        return HElement.gen(EMPTY)
    return _theta_prime(eta[-1], _unsigned_direct(eta[:-1]))


_ROUTES = {"left": antipode_left, "right": antipode_right}


def antipode_generator(eta: Word, method: str = "left") -> HElement:
    eta = tuple(eta)
    if method == "direct":
        return -HElement.gen(EMPTY) if not eta else antipode_direct(eta)
    try:
        return _ROUTES[method](eta)
    except KeyError:
        raise ValueError(f"unknown antipode method {method!r}") from None


def antipode(h: HElement, method: str = "left") -> HElement:
    """S on all of H: S(1) = 1 and S is multiplicative (H is commutative)."""
    gen = lambda w: antipode_generator(w, method)
    return linear_map(h, lambda m: dict(_antipode_of_monomial(m, gen).items()))


def _apply_word(
    w: Word,
    letter_map: Callable[[int, Series], Series],
    cache: dict,
) -> Series:
    # psi(x_{i1} ... x_{ik})(1) = psi(x_{i1})( ... psi(x_{ik})(1)), innermost letter last
    if w in cache:
        return cache[w]
    if not w:
        out = Series({EMPTY: 1})
    else:
        out = letter_map(w[0], _apply_word(w[1:], letter_map, cache))
    cache[w] = out
    return out


def _compose_generic(c: Series, d: Series, n: int, keep_x1: bool) -> Series:
    # Both letter maps are degree-nondecreasing, so words of c above n and
    # intermediate words above n never reach the degree <= n part of the result.
    def letter_map(x: int, e: Series) -> Series:
        if x == X0:
            return prepend(X0, e, n)
        out = prepend(X0, shuffle_series(d, e, n - 2), n) if n > 2 else Series.zero(n)
        if keep_x1:
            out = out + prepend(X1, e, n)
        return out

    cache: dict = {}
    acc = Series.zero(n)
    for w, k in c.items():
        if degree(w) > n:
            continue
        acc = acc + _apply_word(w, letter_map, cache) * k
    trunc = _min_trunc(_min_trunc(n, c.truncation), d.truncation)
    return Series(acc.terms, trunc)


def compose(c: Series, d: Series, n: int) -> Series:
    """Composition product c o d, known to degree n."""
    return _compose_generic(c, d, n, keep_x1=False)


def mod_compose(c: Series, d: Series, n: int) -> Series:
    """Modified composition product, with x1 -> x1 e + x0 (d sh e)."""
    return _compose_generic(c, d, n, keep_x1=True)


def group_product(c: Series, d: Series, n: int) -> Series:
    """Non-delta part of (delta + c) o (delta + d) = delta + d + c mod_compose d."""
    return d.truncate(n) + mod_compose(c, d, n)


def group_inverse(c: Series, n: int, method: str = "left") -> Series:
    """Non-delta part of (delta + c)^{-1}, with coefficients S a_w evaluated on c."""
    c = c.truncate(n)
    terms = {w: evaluate(antipode_generator(w, method), c) for w in words_up_to_degree(n)}
    return Series(terms, _min_trunc(n, c.truncation))


def group_inverse_fixpoint(c: Series, n: int) -> Series:
    """Solve d + c mod_compose d = 0 by iterating d <- -(c mod_compose d).

    Each pass fixes at least one more degree, so n passes suffice.
    """
    c = c.truncate(n)
    d = Series.zero(n)
    for _ in range(n + 1):
        nxt = -mod_compose(c, d, n)
        if nxt.same_terms(d):
            break
        d = nxt
    return Series(d.terms, _min_trunc(n, c.truncation))


def feedback(c: Series, d: Series, n: int) -> Series:
    """Feedback product c @ d = c mod_compose ((-d) o c)^{-1}."""
    inner = group_inverse(compose(-d, c, n), n)
    return mod_compose(c, inner, n)


def feedback_fixpoint(c: Series, d: Series, n: int) -> Series:
    """Closed loop e = c mod_compose (d o e), solved by iteration.

    Independent of the antipode; used to cross-check :func:`feedback`.
    """
    e = Series.zero(n)
    for _ in range(n + 1):
        nxt = mod_compose(c, compose(d, e, n), n)
        if nxt.same_terms(e):
            break
        e = nxt
    return Series(e.terms, _min_trunc(_min_trunc(n, c.truncation), d.truncation))


def unity_feedback(c: Series, n: int, method: str = "left") -> Series:
    """c @ delta = (-c)^{-1}."""
    return group_inverse(-c, n, method)
