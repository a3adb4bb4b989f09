"""Invariant suites behind ``devlin-hopf verify``.

Every check is a function ``(max_degree, rng) -> (passed, detail)``.  They are
deliberately exhaustive over all words up to ``max_degree`` where that is
cheap, and randomized (but seeded) otherwise.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from . import abel, devlin, hopf
from .antipode import (
    antipode,
    antipode_direct,
    antipode_left,
    antipode_right,
    evaluate,
    feedback,
    feedback_fixpoint,
    group_inverse,
    group_inverse_fixpoint,
    group_product,
    mod_compose,
    unity_feedback,
)
from .series import Series, ferfera, shuffle, shuffle_right, shuffle_series
from .words import LETTERS, X0, degree, words_of_degree, words_up_to_degree


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def random_series(rng: random.Random, n: int, lo: int = -3, hi: int = 3, density: float = 1.0) -> Series:
    terms = {}
    for w in words_up_to_degree(n):
        if rng.random() < density:
            terms[w] = rng.randint(lo, hi)
    return Series(terms, n)


def _first_failure(items, pred) -> str | None:
    for it in items:
        if not pred(it):
            return repr(it)
    return None


def _result(fail: str | None, count: int, what: str) -> tuple[bool, str]:
    if fail is None:
        return True, f"{count} {what}"
    return False, f"counterexample {fail}"


def check_word_enumeration(n, rng):
    fail = None
    total = 0
    for d in range(1, n + 1):
        ws = words_of_degree(d)
        brute = {w for k in range(d) for w in itertools.product(LETTERS, repeat=k) if degree(w) == d}
        total += len(ws)
        if len(set(ws)) != len(ws) or set(ws) != brute:
            fail = f"degree {d}"
            break
    return _result(fail, total, "words enumerated")


def check_shuffle_recursions(n, rng):
    words = [w for k in range(0, 5) for w in itertools.product(LETTERS, repeat=k)]
    pairs = [(u, v) for u in words for v in words if len(u) + len(v) <= min(n, 8)]
    fail = _first_failure(pairs, lambda p: shuffle(*p) == shuffle_right(*p))
    return _result(fail, len(pairs), "word pairs")


def check_shuffle_algebra(n, rng):
    for _ in range(5):
        a, b, c = (random_series(rng, 4, density=0.5) for _ in range(3))
        a, b, c = (Series(s.terms) for s in (a, b, c))
        if shuffle_series(a, b) != shuffle_series(b, a):
            return False, "not commutative"
        if shuffle_series(shuffle_series(a, b), c) != shuffle_series(a, shuffle_series(b, c)):
            return False, "not associative"
    return True, "5 random triples of degree <= 4"


def check_deshuffle_dual(n, rng):
    ws = [w for w in words_up_to_degree(n) if len(w) <= 7]
    fail = _first_failure(ws, lambda w: hopf.deshuffle(w) == hopf.deshuffle_dual(w))
    return _result(fail, len(ws), "words")


def check_coassociativity(n, rng):
    ws = words_up_to_degree(n)
    fail = _first_failure(ws, lambda w: (lambda s: s[0] == s[1])(hopf.coassociativity_sides(w)))
    return _result(fail, len(ws), "generators")


def check_counit(n, rng):
    ws = words_up_to_degree(n)

    def ok(w):
        left, right = hopf.counit_sides(w)
        return left == right == hopf.HElement.gen(w)

    return _result(_first_failure(ws, ok), len(ws), "generators")


def check_grading(n, rng):
    ws = words_up_to_degree(n)

    def ok(w):
        return all(hopf.mono_degree(a) + hopf.mono_degree(b) == degree(w) for (a, b), _ in hopf.full_coproduct(w).items())

    return _result(_first_failure(ws, ok), len(ws), "generators")


def check_big_theta(n, rng):
    ws = [w for w in words_up_to_degree(n) if w]
    fail = _first_failure(ws, lambda w: hopf.big_theta_coproduct(w) == hopf.full_coproduct(w))
    return _result(fail, len(ws), "words")


def check_antipode_routes(n, rng):
    ws = [w for w in words_up_to_degree(n) if w]
    fail = _first_failure(ws, lambda w: antipode_left(w) == antipode_right(w) == antipode_direct(w))
    return _result(fail, len(ws), "words")


def antipode_axiom_holds(w) -> bool:
    t = hopf.full_coproduct(w)
    left = hopf.HElement()
    right = hopf.HElement()
    for (m1, m2), c in t.items():
        left = left + antipode(hopf.HElement.mono(*m1)) * hopf.HElement.mono(*m2) * c
        right = right + hopf.HElement.mono(*m1) * antipode(hopf.HElement.mono(*m2)) * c
    return not left and not right


def check_antipode_axiom(n, rng):
    ws = words_up_to_degree(n)
    return _result(_first_failure(ws, antipode_axiom_holds), len(ws), "generators")


def berlin_sum(w) -> int:
    return sum(c for _, c in antipode_left(w + (X0,)).items())


def check_berlin(n, rng):
    ws = words_up_to_degree(max(n - 2, 1))
    return _result(_first_failure(ws, lambda w: berlin_sum(w) == 0), len(ws), "words")


def check_inverse_oracle(n, rng):
    m = min(n, 8)
    for _ in range(5):
        c = random_series(rng, m)
        if not group_inverse(c, m).same_terms(group_inverse_fixpoint(c, m)):
            return False, f"mismatch for {c}"
    return True, f"5 random series, truncation {m}"


def check_group_laws(n, rng):
    m = min(n, 6)
    zero = Series.zero(m)
    for _ in range(3):
        c, d, e = (random_series(rng, m) for _ in range(3))
        if group_product(c, zero, m) != c or group_product(zero, c, m) != c:
            return False, "delta is not a unit"
        inv = group_inverse(c, m)
        if group_product(c, inv, m) or group_product(inv, c, m):
            return False, "inverse is not two-sided"
        lhs = group_product(group_product(c, d, m), e, m)
        rhs = group_product(c, group_product(d, e, m), m)
        if lhs != rhs:
            return False, "not associative"
    return True, f"3 random triples, truncation {m}"


def check_unity_fixed_point(n, rng):
    m = min(n, 8)
    for _ in range(3):
        c = random_series(rng, m)
        e = unity_feedback(c, m)
        if not e.same_terms(mod_compose(c, e, m)):
            return False, f"fixed point fails for {c}"
    return True, f"3 random series, truncation {m}"


def check_feedback_oracle(n, rng):
    m = min(n, 6)
    for _ in range(3):
        c = random_series(rng, m, density=0.5)
        d = random_series(rng, m, density=0.5)
        if not feedback(c, d, m).same_terms(feedback_fixpoint(c, d, m)):
            return False, f"feedback mismatch for c={c}, d={d}"
    return True, f"3 random pairs, truncation {m}"


def check_devlin_routes(n, rng):
    for k in range(1, n + 1):
        rec = devlin.devlin_recursive(k).poly
        if devlin.devlin_closed(k).poly != rec or devlin.devlin_antipode(k, n).poly != rec:
            return False, f"grade {k}"
    return True, f"grades 1..{n}"


def check_lie_oracle(n, rng):
    ws = words_up_to_degree(n)
    fail = _first_failure(ws, lambda w: devlin.lie_coeff(w) == devlin.devlin_coeff_closed(w, degree(w)))
    return _result(fail, len(ws), "words")


def check_degree_scaling(n, rng):
    pairs = [(w, x) for w in words_up_to_degree(n) for x in LETTERS if degree(w + (x,)) <= n]
    fail = _first_failure(pairs, lambda p: (lambda r: r[0] == r[1])(devlin.check_degree_scaling(*p)))
    return _result(fail, len(pairs), "(word, letter) pairs")


def check_antipode_recursion(n, rng):
    for k in range(3, n + 1):
        if devlin.devlin_antipode_recursion(k) != devlin.devlin_antipode(k).poly:
            return False, f"grade {k}"
    return True, f"grades 3..{n}"


def check_theta_hat(n, rng):
    minus_c = -ferfera(n)
    ws = [w for w in words_up_to_degree(n) if w]

    def ok(w):
        h = devlin.theta_hat(w)
        if any(X0 in v for v in h.words()):
            return False
        sign = 1 if len(w) % 2 == 1 else -1
        return sign * evaluate(h, minus_c) == evaluate(antipode_left(w), minus_c)

    return _result(_first_failure(ws, ok), len(ws), "words")


def check_iterated_integral_products(n, rng):
    u = abel.InputPair(
        abel.PolyFunction(tuple(Fraction(rng.randint(-4, 4), 4) for _ in range(3))),
        abel.PolyFunction(tuple(Fraction(rng.randint(-4, 4), 4) for _ in range(3))),
    )
    words = [w for k in range(0, 4) for w in itertools.product(LETTERS, repeat=k)]
    count = 0
    for a in words:
        for b in words:
            if len(a) + len(b) > min(n, 5):
                continue
            count += 1
            lhs = abel.iterated_integral(a, u) * abel.iterated_integral(b, u)
            rhs = abel.fliess_polynomial(shuffle(a, b), u, degree(a) + degree(b) - 1)
            if lhs != rhs:
                return False, f"product rule fails for {a}, {b}"
    return True, f"{count} word pairs"


def check_ode_closed_forms(n, rng):
    one, zero = abel.PolyFunction((1,)), abel.PolyFunction()
    z = abel.abel_numeric(abel.InputPair(zero, one), 1.0, 0.2, 1e-4)
    if abs(z - 1.25) > 1e-8:
        return False, f"1/(1-t) at 0.2: {z!r}"
    z = abel.abel_numeric(abel.InputPair(one, zero), 1.0, 0.2, 1e-4)
    if abs(z - 1 / math.sqrt(0.6)) > 1e-6:
        return False, f"(1-2t)^(-1/2) at 0.2: {z!r}"
    return True, "both closed forms"


SUITES = {
    "words.enumeration": check_word_enumeration,
    "shuffle.recursions": check_shuffle_recursions,
    "shuffle.algebra": check_shuffle_algebra,
    "hopf.deshuffle_dual": check_deshuffle_dual,
    "hopf.coassociativity": check_coassociativity,
    "hopf.counit": check_counit,
    "hopf.grading": check_grading,
    "hopf.big_theta": check_big_theta,
    "antipode.routes": check_antipode_routes,
    "antipode.axiom": check_antipode_axiom,
    "antipode.berlin": check_berlin,
    "group.inverse_oracle": check_inverse_oracle,
    "group.laws": check_group_laws,
    "feedback.unity_fixed_point": check_unity_fixed_point,
    "feedback.oracle": check_feedback_oracle,
    "devlin.routes": check_devlin_routes,
    "devlin.lie_oracle": check_lie_oracle,
    "devlin.degree_scaling": check_degree_scaling,
    "devlin.antipode_recursion": check_antipode_recursion,
    "devlin.theta_hat": check_theta_hat,
    "abel.product_rule": check_iterated_integral_products,
    "abel.closed_forms": check_ode_closed_forms,
}


def run_suites(max_degree: int = 8, seed: int = 0, names=None) -> list[CheckResult]:
    names = list(SUITES) if not names else list(names)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
    out = []
    for name in names:
        rng = random.Random(f"{seed}:{name}")
        t0 = time.perf_counter()
        try:
            passed, detail = SUITES[name](max_degree, rng)
        except Exception as exc:  # a crashing check is a failing check
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(name, passed, detail, time.perf_counter() - t0))
    return out
