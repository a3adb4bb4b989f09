"""The commutative algebra H of coordinate functions and its coproducts.

A coordinate function ``a_w`` is represented by its word ``w``.  A monomial is
a sorted tuple of words (a multiset); the empty tuple is the unit ``1`` of H
and has degree 0, while ``(EMPTY,)`` is the generator ``a_e`` of degree 1.
Keeping the two apart is what makes the whole construction work.

Elements of H and of H (x) H are dictionaries from monomials (or pairs of
monomials) to rational coefficients, wrapped in :class:`HElement` and
:class:`TensorElement`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from numbers import Rational
from typing import Callable, Iterable, Mapping, Tuple

from .series import format_rational, shuffle
from .words import EMPTY, X0, X1, Word, degree, format_word, word_key

Monomial = Tuple[Word, ...]
UNIT: Monomial = ()


def _coef(x):
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return _coef(Fraction(x))
    raise TypeError(f"coefficients must be exact rationals, got {type(x).__name__}")


def _prune(acc: dict) -> dict:
    return {k: _coef(v) for k, v in acc.items() if v}


def monomial(*words: Iterable[int]) -> Monomial:
    return tuple(sorted((tuple(w) for w in words), key=word_key))


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    return tuple(sorted(m1 + m2, key=word_key))


def mono_degree(m: Monomial) -> int:
    return sum(degree(w) for w in m)


def format_monomial(m: Monomial) -> str:
    if not m:
        return "1"
    # largest factor first, e.g. a[x1x1]a[e]
    return "".join(f"a[{format_word(w)}]" for w in reversed(m))


def _mono_order(m: Monomial):
    return (len(m), tuple(word_key(w) for w in reversed(m)))


def _format_terms(keys_coeffs, render) -> str:
    parts = []
    for i, (k, c) in enumerate(keys_coeffs):
        mag = abs(c)
        body = render(k)
        if mag != 1:
            body = f"{format_rational(Fraction(mag))}*{body}"
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"


class HElement:
    """Rational linear combination of monomials in the coordinate functions."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for m, c in items:
            m = tuple(sorted((tuple(w) for w in m), key=word_key))
            acc[m] = acc.get(m, 0) + c
        self._terms = _prune(acc)

    @classmethod
    def _raw(cls, terms: dict) -> "HElement":
        # terms already canonical and pruned
        h = cls.__new__(cls)
        h._terms = terms
        return h

    @classmethod
    def unit(cls) -> "HElement":
        return cls._raw({UNIT: 1})

    @classmethod
    def gen(cls, w: Iterable[int], coeff=1) -> "HElement":
        return cls._raw({(tuple(w),): _coef(coeff)})

    @classmethod
    def mono(cls, *words, coeff=1) -> "HElement":
        return cls._raw({monomial(*words): _coef(coeff)})

    def items(self):
        return self._terms.items()

    def monomials(self) -> list[Monomial]:
        return list(self._terms)

    def coefficient(self, m: Monomial):
        return self._terms.get(tuple(sorted(m, key=word_key)), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def grades(self) -> set[int]:
        return {mono_degree(m) for m in self._terms}

    def words(self) -> set[Word]:
        return {w for m in self._terms for w in m}

    def __add__(self, other: "HElement") -> "HElement":
        if not isinstance(other, HElement):
            return NotImplemented
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, 0) + c
        return HElement._raw(_prune(acc))

    def __neg__(self) -> "HElement":
        return HElement._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "HElement") -> "HElement":
        if not isinstance(other, HElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "HElement":
        if isinstance(other, HElement):
            return h_mul(self, other)
        k = _coef(other)
        return HElement._raw(_prune({m: k * c for m, c in self._terms.items()}))

    def __rmul__(self, other) -> "HElement":
        return self * other

    def __eq__(self, other) -> bool:
        if not isinstance(other, HElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"HElement({str(self)!r})"

    def __str__(self) -> str:
        return format_h(self)


def format_h(h: HElement) -> str:
    keys = sorted(h._terms, key=_mono_order)
    return _format_terms(((m, h._terms[m]) for m in keys), format_monomial)


def h_mul(a: HElement, b: HElement) -> HElement:
    acc: dict = {}
    for m1, c1 in a._terms.items():
        for m2, c2 in b._terms.items():
            m = mono_mul(m1, m2)
            acc[m] = acc.get(m, 0) + c1 * c2
    return HElement._raw(_prune(acc))


def linear_map(h: HElement, f: Callable[[Monomial], Mapping[Monomial, object]]) -> HElement:
    acc: dict = {}
    for m, c in h._terms.items():
        for m2, c2 in f(m).items():
            acc[m2] = acc.get(m2, 0) + c * c2
    return HElement._raw(_prune(acc))


def _augment_monomial(m: Monomial, grow: Callable[[Word], Word]) -> dict:
    # Leibniz rule over the factors; the unit maps to zero
    out: dict = {}
    for k in range(len(m)):
        new = tuple(sorted(m[:k] + (grow(m[k]),) + m[k + 1:], key=word_key))
        out[new] = out.get(new, 0) + 1
    return out


def theta_mono(i: int, m: Monomial) -> dict:
    return _augment_monomial(m, lambda w: (i,) + w)


def tilde_theta_mono(i: int, m: Monomial) -> dict:
    return _augment_monomial(m, lambda w: w + (i,))


def theta(i: int, h: HElement) -> HElement:
    """Left augmentation a_w -> a_{x_i w}, extended as a derivation."""
    return linear_map(h, lambda m: theta_mono(i, m))


def tilde_theta(i: int, h: HElement) -> HElement:
    """Right augmentation a_w -> a_{w x_i}, extended as a derivation."""
    return linear_map(h, lambda m: tilde_theta_mono(i, m))


def kappa(eta: Word, h: HElement) -> HElement:
    """Multiplication by the coordinate function a_eta."""
    return h_mul(h, HElement.gen(eta))


def counit(h: HElement):
    return h._terms.get(UNIT, 0)


class TensorElement:
    """Rational combination of pairs of monomials, an element of H (x) H."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for (m1, m2), c in items:
            key = (tuple(sorted(map(tuple, m1), key=word_key)), tuple(sorted(map(tuple, m2), key=word_key)))
            acc[key] = acc.get(key, 0) + c
        self._terms = _prune(acc)

    @classmethod
    def _raw(cls, terms: dict) -> "TensorElement":
        t = cls.__new__(cls)
        t._terms = terms
        return t

    @classmethod
    def pure(cls, m1: Monomial, m2: Monomial, coeff=1) -> "TensorElement":
        return cls._raw({(m1, m2): _coef(coeff)})

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "TensorElement") -> "TensorElement":
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return TensorElement._raw(_prune(acc))

    def __neg__(self) -> "TensorElement":
        return TensorElement._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        # algebra product in H (x) H, slot by slot
        acc: dict = {}
        for (a1, a2), c in self._terms.items():
            for (b1, b2), d in other._terms.items():
                k = (mono_mul(a1, b1), mono_mul(a2, b2))
                acc[k] = acc.get(k, 0) + c * d
        return TensorElement._raw(_prune(acc))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"TensorElement({str(self)!r})"

    def __str__(self) -> str:
        keys = sorted(self._terms, key=lambda k: (_mono_order(k[0]), _mono_order(k[1])))
        return _format_terms(
            ((k, self._terms[k]) for k in keys),
            lambda k: f"{format_monomial(k[0])} (x) {format_monomial(k[1])}",
        )


def tensor_map(t: TensorElement, f, g) -> TensorElement:
    """Apply f (x) g, where f and g map a monomial to a dict of monomials."""
    acc: dict = {}
    for (m1, m2), c in t._terms.items():
        fm = f(m1)
        if not fm:
            continue
        gm = g(m2)
        for n1, c1 in fm.items():
            for n2, c2 in gm.items():
                k = (n1, n2)
                acc[k] = acc.get(k, 0) + c * c1 * c2
    return TensorElement._raw(_prune(acc))


def _identity(m: Monomial) -> dict:
    return {m: 1}


def mu(t: TensorElement) -> HElement:
    acc: dict = {}
    for (m1, m2), c in t._terms.items():
        m = mono_mul(m1, m2)
        acc[m] = acc.get(m, 0) + c
    return HElement._raw(_prune(acc))


@lru_cache(maxsize=None)
def deshuffle(eta: Word) -> TensorElement:
    """Deshuffle coproduct of a_eta via the right-augmentation recursion."""
    eta = tuple(eta)
    if not eta:
        return TensorElement.pure((EMPTY,), (EMPTY,))
    prev = deshuffle(eta[:-1])
    x = eta[-1]
    step = lambda m: tilde_theta_mono(x, m)
    return tensor_map(prev, step, _identity) + tensor_map(prev, _identity, step)


def deshuffle_dual(eta: Word) -> TensorElement:
    """sum over (xi, nu) of <xi sh nu, eta> a_xi (x) a_nu, read off actual shuffles."""
    eta = tuple(eta)
    n = len(eta)
    pairs = set()
    for k in range(n + 1):
        for pos in combinations(range(n), k):
            rest = [i for i in range(n) if i not in pos]
            pairs.add((tuple(eta[i] for i in pos), tuple(eta[i] for i in rest)))
    acc = {}
    for xi, nu in pairs:
        c = shuffle(xi, nu).terms.get(eta, 0)
        if c:
            acc[((xi,), (nu,))] = c
    return TensorElement(acc)


@lru_cache(maxsize=None)
def tilde_coproduct(eta: Word) -> TensorElement:
    """The coproduct whose left slot is always a single coordinate function.

    Built by prepending letters:  x1 acts through theta_1 on the left slot,
    x0 additionally splits the tail with the deshuffle coproduct.
    """
    eta = tuple(eta)
    if not eta:
        return TensorElement.pure((EMPTY,), UNIT)
    first, rest = eta[0], eta[1:]
    out = tensor_map(tilde_coproduct(rest), lambda m: theta_mono(first, m), _identity)
    if first == X0:
        acc = dict(out._terms)
        for (l, r), c in deshuffle(rest).items():
            # l = (v',), r = (v'',)
            for (p, q), d in tilde_coproduct(l[0]).items():
                key = (((X1,) + p[0],), mono_mul(q, r))
                acc[key] = acc.get(key, 0) + c * d
        out = TensorElement._raw(_prune(acc))
    return out


@lru_cache(maxsize=None)
def full_coproduct(eta: Word) -> TensorElement:
    eta = tuple(eta)
    return tilde_coproduct(eta) + TensorElement.pure(UNIT, (eta,))


@lru_cache(maxsize=None)
def reduced_coproduct(eta: Word) -> TensorElement:
    eta = tuple(eta)
    return tilde_coproduct(eta) - TensorElement.pure((eta,), UNIT)


def coproduct_monomial(m: Monomial) -> TensorElement:
    """Delta on a monomial, extended multiplicatively; Delta(1) = 1 (x) 1."""
    out = TensorElement.pure(UNIT, UNIT)
    for w in m:
        out = out * full_coproduct(w)
    return out


def coproduct(h: HElement) -> TensorElement:
    acc: dict = {}
    for m, c in h.items():
        for k, d in coproduct_monomial(m).items():
            acc[k] = acc.get(k, 0) + c * d
    return TensorElement._raw(_prune(acc))


def _big_theta(i: int, t: TensorElement) -> TensorElement:
    step = lambda m: tilde_theta_mono(i, m)
    out = tensor_map(t, step, _identity) + tensor_map(t, _identity, step)
    if i == X0:
        out = out + tensor_map(
            t,
            lambda m: tilde_theta_mono(X1, m),
            lambda m: {mono_mul(m, (EMPTY,)): 1},
        )
    return out


def big_theta_coproduct(eta: Word) -> TensorElement:
    """Delta a_eta obtained by pushing Delta a_e through the operators Theta~_i."""
    eta = tuple(eta)
    if not eta:
        raise ValueError("big_theta_coproduct needs a nonempty word")
    t = full_coproduct(EMPTY)
    for i in eta:
        t = _big_theta(i, t)
    return t


def coassociativity_sides(eta: Word) -> tuple[dict, dict]:
    """Return ((Delta (x) id) Delta a_eta, (id (x) Delta) Delta a_eta) as triple-tensor dicts."""
    left: dict = {}
    right: dict = {}
    for (m1, m2), c in full_coproduct(tuple(eta)).items():
        for (p, q), d in coproduct_monomial(m1).items():
            k = (p, q, m2)
            left[k] = left.get(k, 0) + c * d
        for (p, q), d in coproduct_monomial(m2).items():
            k = (m1, p, q)
            right[k] = right.get(k, 0) + c * d
    return _prune(left), _prune(right)


def counit_sides(eta: Word) -> tuple[HElement, HElement]:
    """((eps (x) id) Delta a_eta, (id (x) eps) Delta a_eta)."""
    left: dict = {}
    right: dict = {}
    for (m1, m2), c in full_coproduct(tuple(eta)).items():
        if m1 == UNIT:
            left[m2] = left.get(m2, 0) + c
        if m2 == UNIT:
            right[m1] = right.get(m1, 0) + c
    return HElement._raw(_prune(left)), HElement._raw(_prune(right))
