from fractions import Fraction

import pytest

from devlin_hopf.hopf import HElement, TensorElement


def W(text: str):
    """'x0x1' -> (0, 1), 'e' -> ().  Deliberately independent of the package parser."""
    if text == "e":
        return ()
    assert text.startswith("x") and len(text) % 2 == 0
    return tuple(int(text[k + 1]) for k in range(0, len(text), 2))


def M(spec: str):
    """'x1 e' -> monomial a[x1]a[e]; '1' -> the unit monomial."""
    return () if spec == "1" else tuple(W(s) for s in spec.split())


def H(*terms):
    """H((coeff, 'x1 e'), ...)"""
    return HElement({M(m): Fraction(c) for c, m in terms} if len({m for _, m in terms}) == len(terms) else _acc(terms))


def _acc(terms):
    out = {}
    for c, m in terms:
        out[M(m)] = out.get(M(m), 0) + Fraction(c)
    return out


def T(*terms):
    """T((coeff, 'x1', '1'), ...) for coeff * a[x1] (x) 1."""
    return TensorElement([((M(a), M(b)), Fraction(c)) for c, a, b in terms])


@pytest.fixture
def rng():
    import random

    return random.Random(12345)
