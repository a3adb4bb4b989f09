"""Devlin's canonical polynomials for the Abel equation dz/dt = alpha z^3 + beta z^2.

Three routes produce the same polynomials a_n:

* the linear recursion a_n = (n-1) a_{n-1} x1 + (n-2) a_{n-2} x0,
* the closed product formula over prefix degrees,
* the feedback antipode evaluated on minus the Ferfera series.

:func:`lie_coeff` is a fourth, independent oracle based on Lie derivatives of
the vector fields z^3 and z^2; it shares no code with the series machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .antipode import antipode_generator, evaluate
from .hopf import HElement, kappa, tilde_theta
from .series import Series, cat, ferfera
from .words import EMPTY, X0, X1, Word, degree, words_of_degree


@dataclass(frozen=True)
class DevlinPolynomial:
    n: int
    poly: Series

    def __str__(self) -> str:
        return str(self.poly)


@lru_cache(maxsize=None)
def _recursive(n: int) -> Series:
    if n == 1:
        return Series({EMPTY: 1})
    if n == 2:
        return Series({(X1,): 1})
    x1 = Series({(X1,): 1})
    x0 = Series({(X0,): 1})
    return (n - 1) * cat(_recursive(n - 1), x1) + (n - 2) * cat(_recursive(n - 2), x0)


def devlin_recursive(n: int) -> DevlinPolynomial:
    if n < 1:
        raise ValueError("Devlin polynomials are indexed from n = 1")
    return DevlinPolynomial(n, _recursive(n))


def devlin_coeff_closed(eta: Word, n: int) -> int:
    """<a_n, eta>: product of the degrees of the proper nonempty prefixes of eta."""
    eta = tuple(eta)
    if degree(eta) != n:
        return 0
    out = 1
    for j in range(1, len(eta)):
        out *= degree(eta[:j])
    return out


def devlin_closed(n: int) -> DevlinPolynomial:
    return DevlinPolynomial(n, Series({w: devlin_coeff_closed(w, n) for w in words_of_degree(n)}))


def devlin_antipode(n: int, n_context: int | None = None, method: str = "left") -> DevlinPolynomial:
    """Degree-n part of (-c)^{-1} for the Ferfera series c."""
    if n_context is None:
        n_context = n
    if not 1 <= n <= n_context:
        raise ValueError("need 1 <= n <= n_context")
    minus_c = -ferfera(n_context)
    terms = {w: evaluate(antipode_generator(w, method), minus_c) for w in words_of_degree(n)}
    return DevlinPolynomial(n, Series(terms))


def devlin_antipode_recursion(n: int, method: str = "left") -> Series:
    """Right-hand side of the antipode form of Devlin's recursion:

    (n-1) sum_{w in X*_{n-1}} S a_w(-c) w x1 + (n-2) sum_{w in X*_{n-2}} S a_w(-c) w x0.
    """
    if n < 3:
        raise ValueError("the antipode recursion is stated for n >= 3")
    minus_c = -ferfera(n)
    acc: dict = {}
    for w in words_of_degree(n - 1):
        acc[w + (X1,)] = (n - 1) * evaluate(antipode_generator(w, method), minus_c)
    for w in words_of_degree(n - 2):
        acc[w + (X0,)] = acc.get(w + (X0,), 0) + (n - 2) * evaluate(antipode_generator(w, method), minus_c)
    return Series(acc)


# exact integer polynomials in z, as coefficient lists (index = power)

def _poly_derivative(p: list[int]) -> list[int]:
    return [k * p[k] for k in range(1, len(p))]


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


_VECTOR_FIELDS = {X0: [0, 0, 0, 1], X1: [0, 0, 1]}  # g0 = z^3, g1 = z^2


def lie_coeff(eta: Word) -> int:
    """L_{g_eta} h (1) for h(z) = z.

    For eta = x_{j_k} ... x_{j_1} the operator is L_{j_1} ... L_{j_k}, so the
    first letter of eta acts on h first.
    """
    p = [0, 1]
    for x in eta:
        p = _poly_mul(_poly_derivative(p), _VECTOR_FIELDS[x])
    return sum(p)


def check_degree_scaling(eta: Word, x: int) -> tuple[Fraction, Fraction]:
    """(S a_{eta x}(-c), deg(a_eta) S a_eta(-c)) for the Ferfera series c."""
    eta = tuple(eta)
    minus_c = -ferfera(degree(eta + (x,)))
    lhs = evaluate(antipode_generator(eta + (x,)), minus_c)
    rhs = degree(eta) * evaluate(antipode_generator(eta), minus_c)
    return lhs, rhs


def theta_hat(eta: Word) -> HElement:
    """Apply theta^_{i_l} ... theta^_{i_1} to a_e.

    theta^_1 is h -> -theta~_1(h) and theta^_0 is h -> a_e theta~_1(h), so only
    coordinate functions of pure x1 words (and a_e) ever appear.
    """
    eta = tuple(eta)
    if not eta:
        raise ValueError("theta_hat needs a nonempty word")
    h = HElement.gen(EMPTY)
    for i in eta:
        h = tilde_theta(X1, h)
        h = kappa(EMPTY, h) if i == X0 else -h
    return h
