"""Generators for the Fibonacci, Tribonacci (plus its 0/2 recoding) and
Thue-Morse words, with exact per-letter prefix-count tables.

Words grow lazily in geometric blocks up to a configurable symbol budget
(RECTBAL_BUDGET environment variable, default 10**7).  Cumulative count
tables are maintained alongside the symbols so any prefix count is an O(1)
lookup.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np


class BudgetExceeded(RuntimeError):
    """A request would grow a word beyond the configured symbol budget."""


DEFAULT_BUDGET = int(os.environ.get("RECTBAL_BUDGET", 10_000_000))


def set_budget(budget: int) -> None:
    """Cap word generation length for new and already-built words."""
    global DEFAULT_BUDGET
    if budget < 1:
        raise ValueError("budget must be positive")
    DEFAULT_BUDGET = budget
    for w in _live_words():
        w.budget = budget


class SequenceKind(Enum):
    FIBONACCI = "fibonacci"
    TRIBONACCI = "tribonacci"
    TRIBONACCI_RECODED = "tribonacci2"
    THUE_MORSE = "thue-morse"


ALPHABETS = {
    SequenceKind.FIBONACCI: (0, 1),
    SequenceKind.TRIBONACCI: (0, 1, 2),
    SequenceKind.TRIBONACCI_RECODED: (0, 2),
    SequenceKind.THUE_MORSE: (0, 1),
}

_FIB_RULES = {ord("0"): "01", ord("1"): "0"}
_TRIB_RULES = {ord("0"): "01", ord("1"): "02", ord("2"): "0"}
_TM_COMPLEMENT = {ord("0"): "1", ord("1"): "0"}
_TRIB2_RECODE = {ord("1"): "0"}


def _generate(kind: SequenceKind, length: int) -> str:
    if kind is SequenceKind.THUE_MORSE:
        s = "0"
        while len(s) < length:
            s = s + s.translate(_TM_COMPLEMENT)
        return s[:length]
    if kind is SequenceKind.TRIBONACCI_RECODED:
        return _generate(SequenceKind.TRIBONACCI, length).translate(_TRIB2_RECODE)
    rules = _FIB_RULES if kind is SequenceKind.FIBONACCI else _TRIB_RULES
    s = "0"
    while len(s) < length:
        s = s.translate(rules)
    return s[:length]


class Word:
    """Lazily materialized word with O(1) prefix-count queries.

    Immutable once a prefix is built; growing only appends.  Symbol arrays
    are uint8, count tables int64 cumulative sums of per-letter indicators.
    """

    def __init__(self, kind: SequenceKind, budget: int | None = None, prefix: str = ""):
        self.kind = kind
        self.budget = DEFAULT_BUDGET if budget is None else budget
        self._prefix = prefix  # fixed symbols glued before the generated word
        self._syms = np.zeros(0, dtype=np.uint8)
        self._counts: dict[int, np.ndarray] = {}

    def __len__(self) -> int:
        return len(self._syms)

    @property
    def alphabet(self) -> tuple[int, ...]:
        return ALPHABETS[self.kind]

    def ensure(self, length: int) -> None:
        if length <= len(self._syms):
            return
        if length > self.budget:
            raise BudgetExceeded(
                f"{length} symbols requested, budget is {self.budget}"
            )
        target = min(self.budget, max(length, 2 * len(self._syms), 1 << 12))
        body = _generate(self.kind, max(target - len(self._prefix), 0))
        text = (self._prefix + body)[:target]
        self._syms = np.frombuffer(text.encode("ascii"), dtype=np.uint8) - ord("0")
        self._counts = {
            c: np.concatenate(
                [[0], np.cumsum((self._syms == c).astype(np.int64))]
            )
            for c in self.alphabet
        }

    def symbols(self, length: int) -> np.ndarray:
        self.ensure(length)
        return self._syms[:length]

    def symbol(self, i: int) -> int:
        self.ensure(i + 1)
        return int(self._syms[i])

    def prefix_count(self, letter: int, k: int) -> int:
        """Occurrences of `letter` among the first k symbols."""
        self.ensure(k)
        return int(self._counts[letter][k])

    def count_table(self, letter: int, length: int) -> np.ndarray:
        """Cumulative count array t -> occurrences of letter in [0, t), t <= length."""
        self.ensure(length)
        return self._counts[letter][: length + 1]


@lru_cache(maxsize=None)
def word(kind: SequenceKind) -> Word:
    return Word(kind)


@lru_cache(maxsize=None)
def sturmian_a_word() -> Word:
    """The Fibonacci word prefixed with a 0: a_0 = 0, a_i = f_{i-1}."""
    return Word(SequenceKind.FIBONACCI, prefix="0")


def _live_words() -> list[Word]:
    built = [word(kind) for kind in SequenceKind]
    built.append(sturmian_a_word())
    return built


def fib_symbol(i: int) -> int:
    """f_i, cross-checked: floor((i+2)*gamma) - floor((i+1)*gamma) vs the morphism."""
    from .exact_quadratic import floor_n_gamma

    via_floor = floor_n_gamma(i + 2) - floor_n_gamma(i + 1)
    via_morphism = word(SequenceKind.FIBONACCI).symbol(i)
    assert via_floor == via_morphism, f"fibonacci word routes disagree at i={i}"
    return via_floor


def sturmian_a_symbol(i: int) -> int:
    """a_0 = 0 and a_i = f_{i-1} for i >= 1."""
    return sturmian_a_word().symbol(i)


def trib_symbol(i: int) -> int:
    return word(SequenceKind.TRIBONACCI).symbol(i)


def trib2_symbol(i: int) -> int:
    """Tribonacci word with 0,1 -> 0 and 2 -> 2."""
    return word(SequenceKind.TRIBONACCI_RECODED).symbol(i)


def tm_symbol(i: int) -> int:
    """Thue-Morse t_i: parity of popcount(i), cross-checked against the morphism."""
    via_popcount = bin(i).count("1") & 1
    via_morphism = word(SequenceKind.THUE_MORSE).symbol(i)
    assert via_popcount == via_morphism, f"thue-morse routes disagree at i={i}"
    return via_popcount


@dataclass(frozen=True)
class PrefixCounts:
    kind: SequenceKind
    limit: int
    tables: dict[int, np.ndarray]

    def count(self, letter: int, k: int) -> int:
        if k > self.limit:
            raise IndexError(f"k={k} beyond table limit {self.limit}")
        return int(self.tables[letter][k])


def prefix_counts(kind: SequenceKind, limit: int) -> PrefixCounts:
    """Exact per-letter counts s_c(k) for all k <= limit."""
    w = word(kind)
    tables = {c: w.count_table(c, limit).copy() for c in w.alphabet}
    return PrefixCounts(kind, limit, tables)
