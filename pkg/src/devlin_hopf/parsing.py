"""Text syntax for words, series, H elements and input polynomials.

    word     := "e" | ("x0" | "x1")+
    series   := term (("+" | "-") term)*       e.g.  "2*x1x1 + x0", "-x1", "3/2*e"
    term     := [rational "*"] word | rational
    h        := hterm (("+" | "-") hterm)*     e.g.  "-a[x0] + a[x1]a[e]"
    hterm    := [rational "*"] (factor+ | "1")
    factor   := "a[" word "]"
    poly     := pterm (("+" | "-") pterm)*     e.g.  "1 + 2*t - 1/3*t^2"

Errors carry the character offset of the offending token.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .abel import PolyFunction
from .hopf import HElement
from .series import Series
from .words import Word


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"offset {offset}: {message}")
        self.message = message
        self.offset = offset


_LETTER = re.compile(r"x([01])")
_RATIONAL = re.compile(r"(\d+)(?:\s*/\s*(\d+))?")


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self, s: str) -> bool:
        self.skip_ws()
        return self.text.startswith(s, self.pos)

    def take(self, s: str) -> bool:
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def fail(self, message: str, offset: int | None = None):
        raise ParseError(message, self.pos if offset is None else offset)

    def rational(self) -> Fraction | None:
        self.skip_ws()
        start = self.pos
        m = _RATIONAL.match(self.text, self.pos)
        if not m:
            return None
        self.pos = m.end()
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            self.fail("zero denominator", start)
        return Fraction(num, den)

    def word(self) -> Word:
        self.skip_ws()
        if self.text.startswith("e", self.pos):
            self.pos += 1
            if _LETTER.match(self.text, self.pos):
                self.fail("the empty word 'e' cannot be combined with letters")
            return ()
        letters = []
        while True:
            m = _LETTER.match(self.text, self.pos)
            if not m:
                break
            letters.append(int(m.group(1)))
            self.pos = m.end()
        if not letters:
            self.fail(f"expected a word (x0, x1 or e), found {self._snippet()!r}")
        if self.pos < len(self.text) and self.text[self.pos].isalnum():
            self.fail(f"unknown letter {self._snippet()!r}")
        return tuple(letters)

    def _snippet(self) -> str:
        m = re.compile(r"\S{1,4}").match(self.text, self.pos)
        return m.group(0) if m else "end of input"


def _signed_terms(cur: _Cursor, parse_term):
    out = []
    sign = 1
    if cur.take("-"):
        sign = -1
    elif cur.take("+"):
        pass
    while True:
        coeff, payload = parse_term(cur)
        out.append((sign * coeff, payload))
        if cur.at_end():
            return out
        if cur.take("+"):
            sign = 1
        elif cur.take("-"):
            sign = -1
        else:
            cur.fail(f"expected '+' or '-', found {cur._snippet()!r}")


def _coefficient(cur: _Cursor):
    """Optional 'rational *' prefix; returns (coefficient, bare) where bare means no '*' followed."""
    start = cur.pos
    q = cur.rational()
    if q is None:
        return Fraction(1), False
    if cur.take("*"):
        return q, False
    cur.skip_ws()
    if start == cur.pos:
        return Fraction(1), False
    return q, True


def parse_word(text: str) -> Word:
    cur = _Cursor(text)
    w = cur.word()
    if not cur.at_end():
        cur.fail(f"unexpected trailing input {cur._snippet()!r}")
    return w


def parse_series(text: str, truncation: int | None = None) -> Series:
    cur = _Cursor(text)
    if cur.at_end():
        cur.fail("empty series")

    def term(c: _Cursor):
        q, bare = _coefficient(c)
        if bare:
            return q, ()
        return q, c.word()

    terms: dict = {}
    for q, w in _signed_terms(cur, term):
        terms[w] = terms.get(w, 0) + q
    return Series(terms, truncation)


def parse_h(text: str) -> HElement:
    cur = _Cursor(text)
    if cur.at_end():
        cur.fail("empty expression")

    def term(c: _Cursor):
        q, bare = _coefficient(c)
        if bare:
            return q, ()
        if c.take("1"):
            return q, ()
        factors = []
        while c.peek("a["):
            c.take("a[")
            factors.append(c.word())
            if not c.take("]"):
                c.fail("expected ']'")
        if not factors:
            c.fail(f"expected a[word] or 1, found {c._snippet()!r}")
        return q, tuple(factors)

    return HElement([(m, q) for q, m in _signed_terms(cur, term)])


def parse_poly(text: str) -> PolyFunction:
    cur = _Cursor(text)
    if cur.at_end():
        cur.fail("empty polynomial")

    def term(c: _Cursor):
        q, bare = _coefficient(c)
        if bare:
            return q, 0
        if not c.take("t"):
            c.fail(f"expected a power of t, found {c._snippet()!r}")
        power = 1
        if c.take("^"):
            c.skip_ws()
            m = re.compile(r"\d+").match(c.text, c.pos)
            if not m:
                c.fail("expected an exponent")
            power = int(m.group(0))
            c.pos = m.end()
        return q, power

    coeffs: dict[int, Fraction] = {}
    for q, k in _signed_terms(cur, term):
        coeffs[k] = coeffs.get(k, 0) + q
    top = max(coeffs, default=0)
    return PolyFunction(tuple(coeffs.get(k, 0) for k in range(top + 1)))
