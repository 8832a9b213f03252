"""Zeckendorf, Tribonacci and base-(-2) numeration systems.

Digit strings are ASCII '0'/'1', most significant digit first; zero is the
empty string.  Zeckendorf digit positions j >= 2 carry Fibonacci weights
with F_2 = 1, F_3 = 2, so e.g. 4 = F_4 + F_2 = "101" and 18 = "101000".
"""
from __future__ import annotations

from dataclasses import dataclass


class InvalidRepresentation(ValueError):
    """Digit string violates the numeration system's digit constraints."""


class EmptyExpansion(ValueError):
    """Requested the summand indices of zero, which has none."""


_FIBS = [0, 1]  # _FIBS[j] = F_j


def fibonacci(j: int) -> int:
    """F_j with F_0 = 0, F_1 = F_2 = 1, F_3 = 2."""
    while len(_FIBS) <= j:
        _FIBS.append(_FIBS[-1] + _FIBS[-2])
    return _FIBS[j]


_TRIBS = [1, 2, 4]  # _TRIBS[j] = weight of digit position j


def tribonacci(j: int) -> int:
    """Tribonacci weight of position j: 1, 2, 4, 7, 13, 24, ..."""
    while len(_TRIBS) <= j:
        _TRIBS.append(_TRIBS[-1] + _TRIBS[-2] + _TRIBS[-3])
    return _TRIBS[j]


@dataclass(frozen=True)
class ZeckRep:
    digits: str
    value: int

    def __str__(self) -> str:
        return self.digits or "0"


@dataclass(frozen=True)
class TribRep:
    digits: str
    value: int

    def __str__(self) -> str:
        return self.digits or "0"


@dataclass(frozen=True)
class NegaBinRep:
    digits: str
    value: int

    def __str__(self) -> str:
        return self.digits or "0"


@dataclass(frozen=True)
class FibIndexList:
    """Zeckendorf summand indices a_1 > a_2 > ... >= 2, no two consecutive."""

    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        idx = self.indices
        for prev, nxt in zip(idx, idx[1:]):
            if nxt >= prev - 1:
                raise InvalidRepresentation(f"indices not sparse-decreasing: {idx}")
        if idx and idx[-1] < 2:
            raise InvalidRepresentation(f"indices must be >= 2: {idx}")

    @property
    def value(self) -> int:
        return sum(fibonacci(j) for j in self.indices)


def fib_index_list(n: int) -> FibIndexList:
    """Descending Zeckendorf summand indices of n >= 1 (greedy)."""
    if n <= 0:
        raise EmptyExpansion("n must be >= 1")
    j = 2
    while fibonacci(j + 1) <= n:
        j += 1
    out = []
    while n > 0:
        while fibonacci(j) > n:
            j -= 1
        out.append(j)
        n -= fibonacci(j)
        j -= 2
    return FibIndexList(tuple(out))


def zeck_encode(n: int) -> ZeckRep:
    """Canonical Zeckendorf digits of n (greedy; empty string for 0)."""
    if n < 0:
        raise ValueError("n must be a natural number")
    if n == 0:
        return ZeckRep("", 0)
    idx = fib_index_list(n).indices
    top = idx[0]
    digits = ["0"] * (top - 1)  # positions top, top-1, ..., 2
    for j in idx:
        digits[top - j] = "1"
    return ZeckRep("".join(digits), n)


def zeck_decode(digits: str | ZeckRep) -> int:
    """Value of a Zeckendorf digit string; rejects adjacent 1 digits."""
    if isinstance(digits, ZeckRep):
        digits = digits.digits
    if any(c not in "01" for c in digits):
        raise InvalidRepresentation(f"not a binary digit string: {digits!r}")
    if "11" in digits:
        raise InvalidRepresentation(f"adjacent 1 digits: {digits!r}")
    total = 0
    for pos, c in enumerate(reversed(digits)):
        if c == "1":
            total += fibonacci(pos + 2)
    return total


def zeck_shift(n: int) -> int:
    """Value of the Zeckendorf digits of n moved one position up (F_j -> F_{j+1})."""
    if n < 0:
        raise ValueError("n must be a natural number")
    if n == 0:
        return 0
    return sum(fibonacci(j + 1) for j in fib_index_list(n).indices)


def is_fibonacci(n: int) -> bool:
    """True iff the canonical Zeckendorf form of n is a 1 followed by zeros."""
    if n <= 0:
        return False
    return len(fib_index_list(n).indices) == 1


def adjacent_fib(u: int, v: int) -> bool:
    """True iff (u, v) = (F_k, F_{k+1}) for some k >= 2."""
    a, b = 1, 2  # (F_2, F_3)
    while a <= u:
        if (a, b) == (u, v):
            return True
        a, b = b, a + b
    return False


def trib_encode(n: int) -> TribRep:
    """Greedy Tribonacci digits of n (no three consecutive 1 digits)."""
    if n < 0:
        raise ValueError("n must be a natural number")
    if n == 0:
        return TribRep("", 0)
    j = 0
    while tribonacci(j + 1) <= n:
        j += 1
    digits = []
    rem = n
    for pos in range(j, -1, -1):
        w = tribonacci(pos)
        if w <= rem:
            digits.append("1")
            rem -= w
        else:
            digits.append("0")
    return TribRep("".join(digits), n)


def trib_decode(digits: str | TribRep) -> int:
    """Value of a Tribonacci digit string; rejects three consecutive 1 digits."""
    if isinstance(digits, TribRep):
        digits = digits.digits
    if any(c not in "01" for c in digits):
        raise InvalidRepresentation(f"not a binary digit string: {digits!r}")
    if "111" in digits:
        raise InvalidRepresentation(f"three consecutive 1 digits: {digits!r}")
    total = 0
    for pos, c in enumerate(reversed(digits)):
        if c == "1":
            total += tribonacci(pos)
    return total


def negabin_encode(n: int) -> NegaBinRep:
    """Base-(-2) digits of any integer (canonical, no leading zeros)."""
    if n == 0:
        return NegaBinRep("", 0)
    value = n
    digits = []
    while n != 0:
        n, r = divmod(n, -2)
        if r < 0:
            n, r = n + 1, r + 2
        digits.append(str(r))
    return NegaBinRep("".join(reversed(digits)), value)


def negabin_decode(digits: str | NegaBinRep) -> int:
    """Value of a base-(-2) digit string."""
    if isinstance(digits, NegaBinRep):
        digits = digits.digits
    if any(c not in "01" for c in digits):
        raise InvalidRepresentation(f"not a binary digit string: {digits!r}")
    total = 0
    for pos, c in enumerate(reversed(digits)):
        if c == "1":
            total += (-2) ** pos
    return total


def pair_encode(m: int, n: int) -> list[tuple[int, int]]:
    """Zip the Zeckendorf digits of m and n msd-first, padding the shorter with 0s."""
    dm = zeck_encode(m).digits
    dn = zeck_encode(n).digits
    width = max(len(dm), len(dn))
    dm = dm.rjust(width, "0")
    dn = dn.rjust(width, "0")
    return [(int(a), int(b)) for a, b in zip(dm, dn)]


def pair_decode(word: list[tuple[int, int]]) -> tuple[int, int]:
    """Values of both tracks of a padded pair word; each track is validated."""
    dm = "".join(str(a) for a, _ in word)
    dn = "".join(str(b) for _, b in word)
    return zeck_decode(dm), zeck_decode(dn)


def format_pair_word(word: list[tuple[int, int]]) -> str:
    """Render a pair word as [0,1][0,0]... matching the digit-pair convention."""
    return "".join(f"[{a},{b}]" for a, b in word)


def parse_pair_word(text: str) -> list[tuple[int, int]]:
    out = []
    for chunk in text.replace("][", "] [").split():
        if not (chunk.startswith("[") and chunk.endswith("]")):
            raise InvalidRepresentation(f"bad pair token: {chunk!r}")
        a, b = chunk[1:-1].split(",")
        out.append((int(a), int(b)))
    return out
