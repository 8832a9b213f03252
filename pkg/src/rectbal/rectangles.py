"""Word rectangles: m x n blocks whose entry (k, l) is the word symbol at
index i + k + l, constant along antidiagonals.

All sums and letter counts reduce to prefix-count differences of the
underlying word, O(m) per query.
"""
from __future__ import annotations

from dataclasses import dataclass

from .words import SequenceKind, Word, sturmian_a_word, word


@dataclass(frozen=True)
class RectangleQuery:
    kind: SequenceKind
    i: int
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.i < 0 or self.m < 0 or self.n < 0:
            raise ValueError(f"negative rectangle parameters: {self}")


@dataclass(frozen=True)
class LetterCountVector:
    counts: dict[int, int]

    def __getitem__(self, letter: int) -> int:
        return self.counts[letter]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def word_rect_sum(w: Word, i: int, m: int, n: int) -> int:
    """Sum of all entries of the rectangle at (i, m, n) over word w."""
    if m == 0 or n == 0:
        return 0
    w.ensure(i + m + n - 1)
    total = 0
    for letter in w.alphabet:
        if letter:
            total += letter * _letter_count(w, letter, i, m, n)
    return total


def word_letter_counts(w: Word, i: int, m: int, n: int) -> LetterCountVector:
    if m == 0 or n == 0:
        return LetterCountVector({c: 0 for c in w.alphabet})
    w.ensure(i + m + n - 1)
    return LetterCountVector(
        {c: _letter_count(w, c, i, m, n) for c in w.alphabet}
    )


def _letter_count(w: Word, letter: int, i: int, m: int, n: int) -> int:
    table = w.count_table(letter, i + m + n - 1)
    return int(sum(table[i + k + n] - table[i + k] for k in range(m)))


def rect_sum(q: RectangleQuery) -> int:
    """T(i, m, n): the sum over all entries of the rectangle."""
    return word_rect_sum(word(q.kind), q.i, q.m, q.n)


def rect_letter_counts(q: RectangleQuery) -> LetterCountVector:
    """Per-letter occurrence counts in the rectangle; they sum to m*n."""
    return word_letter_counts(word(q.kind), q.i, q.m, q.n)


def delta(i: int, m: int, n: int) -> int:
    """T(i+1, m, n) - T(i, m, n) on the 0-prefixed Fibonacci word; lies in
    {-1, 0, 1}."""
    w = sturmian_a_word()
    return word_rect_sum(w, i + 1, m, n) - word_rect_sum(w, i, m, n)


def rect_transpose_check(q: RectangleQuery) -> bool:
    """Letter counts of the m x n and n x m rectangles at the same i agree."""
    flipped = RectangleQuery(q.kind, q.i, q.n, q.m)
    return rect_letter_counts(q) == rect_letter_counts(flipped)
