"""Words over the two-letter alphabet {x0, x1}.

A word is a plain tuple of letters, each letter being ``X0 = 0`` or ``X1 = 1``.
The empty tuple is the empty word.  Words are graded by

    degree(w) = 2 * |w|_x0 + |w|_x1 + 1

so the empty word has degree 1 and no word has degree 0.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional, Tuple

Word = Tuple[int, ...]

X0 = 0
X1 = 1
LETTERS = (X0, X1)
EMPTY: Word = ()


def degree(w: Word) -> int:
    return 2 * w.count(X0) + w.count(X1) + 1


def letter_degree(x: int) -> int:
    """Degree increase caused by appending or prepending ``x``."""
    return 2 if x == X0 else 1


def word_key(w: Word) -> tuple[int, Word]:
    """Canonical sort key: length first, then lexicographic with x0 < x1."""
    return (len(w), w)


@lru_cache(maxsize=None)
def _words_of_degree(n: int) -> tuple[Word, ...]:
    if n <= 0:
        return ()
    if n == 1:
        return (EMPTY,)
    out = [w + (X1,) for w in _words_of_degree(n - 1)]
    out += [w + (X0,) for w in _words_of_degree(n - 2)]
    return tuple(sorted(out, key=word_key))


def words_of_degree(n: int) -> list[Word]:
    """All words of degree exactly ``n`` in canonical order.

    Built by appending x1 to the degree n-1 words and x0 to the degree n-2
    words; every word of degree n >= 2 arises exactly once that way.
    """
    return list(_words_of_degree(n))


def words_up_to_degree(n: int) -> list[Word]:
    out: list[Word] = []
    for k in range(1, n + 1):
        out.extend(_words_of_degree(k))
    return out


def left_shift(x: int, w: Word) -> Optional[Word]:
    """Return v if w = x v, otherwise None (the zero of the shift map)."""
    if w and w[0] == x:
        return w[1:]
    return None


def right_shift(x: int, w: Word) -> Optional[Word]:
    """Return v if w = v x, otherwise None."""
    if w and w[-1] == x:
        return w[:-1]
    return None


def format_word(w: Word) -> str:
    if not w:
        return "e"
    return "".join(f"x{x}" for x in w)
