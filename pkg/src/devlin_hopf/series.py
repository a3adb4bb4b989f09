"""Truncated noncommutative power series with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from numbers import Rational
from typing import Iterable, Mapping, Optional

from .words import EMPTY, X1, Word, degree, format_word, letter_degree, word_key


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"coefficients must be exact rationals, got {type(x).__name__}")


def _min_trunc(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class Series:
    """Finite sum of words with rational coefficients.

    ``truncation`` is ``None`` for an exact polynomial, otherwise the degree
    up to which the (possibly infinite) series is known.  Words above the
    truncation degree and zero coefficients are never stored.
    """

    __slots__ = ("_terms", "truncation")

    def __init__(self, terms: Mapping[Word, object] | Iterable = (), truncation: Optional[int] = None):
        if truncation is not None and truncation < 1:
            raise ValueError("truncation degree must be a positive integer")
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[Word, Fraction] = {}
        for w, c in items:
            w = tuple(w)
            if truncation is not None and degree(w) > truncation:
                continue
            c = _frac(c)
            if c:
                out[w] = out.get(w, 0) + c
        self._terms = {w: c for w, c in out.items() if c}
        self.truncation = truncation

    @classmethod
    def word(cls, w: Word, coeff=1, truncation: Optional[int] = None) -> "Series":
        return cls({tuple(w): coeff}, truncation)

    @classmethod
    def zero(cls, truncation: Optional[int] = None) -> "Series":
        return cls({}, truncation)

    @property
    def terms(self) -> dict[Word, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def words(self) -> list[Word]:
        return sorted(self._terms, key=word_key)

    def coefficient(self, w: Word) -> Fraction:
        w = tuple(w)
        if self.truncation is not None and degree(w) > self.truncation:
            raise ValueError(f"coefficient of {format_word(w)} lies above truncation degree {self.truncation}")
        return self._terms.get(w, Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def max_degree(self) -> int:
        return max((degree(w) for w in self._terms), default=0)

    def truncate(self, n: int) -> "Series":
        return Series(self._terms, _min_trunc(self.truncation, n))

    def homogeneous(self, n: int) -> "Series":
        """Degree-n component, as an exact polynomial."""
        return Series({w: c for w, c in self._terms.items() if degree(w) == n})

    def __add__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) + c
        return Series(out, _min_trunc(self.truncation, other.truncation))

    def __neg__(self) -> "Series":
        return Series({w: -c for w, c in self._terms.items()}, self.truncation)

    def __sub__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k) -> "Series":
        if isinstance(k, Series):
            return NotImplemented
        k = _frac(k)
        return Series({w: k * c for w, c in self._terms.items()}, self.truncation)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._terms == other._terms and self.truncation == other.truncation

    def same_terms(self, other: "Series") -> bool:
        """Compare coefficients only, ignoring the truncation bookkeeping."""
        return self._terms == other._terms

    def __hash__(self):
        return hash((frozenset(self._terms.items()), self.truncation))

    def __repr__(self) -> str:
        t = "exact" if self.truncation is None else self.truncation
        return f"Series({format_series(self)!r}, truncation={t})"

    def __str__(self) -> str:
        return format_series(self)


def render_order(w: Word) -> tuple:
    # longest words first, then lexicographic; this is how the polynomial tables read
    return (-len(w), w)


def format_rational(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_series(s: Series) -> str:
    if not s:
        return "0"
    parts = []
    for i, w in enumerate(sorted(s._terms, key=render_order)):
        c = s._terms[w]
        mag = abs(c)
        body = format_word(w) if mag == 1 else f"{format_rational(mag)}*{format_word(w)}"
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


@lru_cache(maxsize=None)
def _shuffle_words(u: Word, v: Word) -> tuple[tuple[Word, int], ...]:
    # left recursion: (x u') sh (y v') = x (u' sh v) + y (u sh v')
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    acc: dict[Word, int] = {}
    for w, k in _shuffle_words(u[1:], v):
        w = (u[0],) + w
        acc[w] = acc.get(w, 0) + k
    for w, k in _shuffle_words(u, v[1:]):
        w = (v[0],) + w
        acc[w] = acc.get(w, 0) + k
    return tuple(sorted(acc.items(), key=lambda t: word_key(t[0])))


@lru_cache(maxsize=None)
def _shuffle_words_right(u: Word, v: Word) -> tuple[tuple[Word, int], ...]:
    # right recursion: (u' x) sh (v' y) = (u' sh v) x + (u sh v') y
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    acc: dict[Word, int] = {}
    for w, k in _shuffle_words_right(u[:-1], v):
        w = w + (u[-1],)
        acc[w] = acc.get(w, 0) + k
    for w, k in _shuffle_words_right(u, v[:-1]):
        w = w + (v[-1],)
        acc[w] = acc.get(w, 0) + k
    return tuple(sorted(acc.items(), key=lambda t: word_key(t[0])))


def shuffle(u: Word, v: Word) -> Series:
    return Series(dict(_shuffle_words(tuple(u), tuple(v))))


def shuffle_right(u: Word, v: Word) -> Series:
    """Shuffle of two words via the right-letter recursion."""
    return Series(dict(_shuffle_words_right(tuple(u), tuple(v))))


def shuffle_series(c: Series, d: Series, max_degree: Optional[int] = None) -> Series:
    """Bilinear shuffle product.

    ``max_degree`` drops output words above that degree (and truncates the
    result there); the operands' truncations are combined by taking the min.
    """
    acc: dict[Word, Fraction] = {}
    for u, a in c.items():
        du = degree(u)
        for v, b in d.items():
            if max_degree is not None and du + degree(v) - 1 > max_degree:
                continue
            ab = a * b
            for w, k in _shuffle_words(u, v):
                acc[w] = acc.get(w, 0) + ab * k
    trunc = _min_trunc(c.truncation, d.truncation)
    if max_degree is not None:
        trunc = _min_trunc(trunc, max_degree)
    return Series(acc, trunc)


def shuffle_power(c: Series, k: int, max_degree: Optional[int] = None) -> Series:
    if k < 0:
        raise ValueError("shuffle power must be nonnegative")
    out = Series({EMPTY: 1}, c.truncation)
    for _ in range(k):
        out = shuffle_series(out, c, max_degree)
    return out


def cat(c: Series, d: Series) -> Series:
    acc: dict[Word, Fraction] = {}
    for u, a in c.items():
        for v, b in d.items():
            w = u + v
            acc[w] = acc.get(w, 0) + a * b
    return Series(acc, _min_trunc(c.truncation, d.truncation))


def prepend(x: int, c: Series, max_degree: Optional[int] = None) -> Series:
    """Left multiplication by a single letter, dropping words above max_degree."""
    out = {(x,) + w: a for w, a in c.items()}
    trunc = None if c.truncation is None else c.truncation + letter_degree(x)
    if max_degree is not None:
        trunc = _min_trunc(trunc, max_degree)
    return Series(out, trunc)


def ferfera(n: int) -> Series:
    """sum_k k! x1^k over the words x1^k of degree <= n."""
    if n < 1:
        raise ValueError("truncation degree must be >= 1")
    return Series({(X1,) * k: factorial(k) for k in range(n)}, n)


def left_shift_series(x: int, c: Series) -> Series:
    """Linear extension of the left shift x^{-1}; loses ``letter_degree(x)`` of precision."""
    trunc = None
    if c.truncation is not None:
        trunc = c.truncation - letter_degree(x)
        if trunc < 1:
            raise ValueError("series is not known to a high enough degree to shift")
    return Series({w[1:]: a for w, a in c.items() if w and w[0] == x}, trunc)
