"""Thue-Morse rectangle balance via the signed excess s = 2*count_1 - m*n.

Adjacent positions pair to sum 1 (t at 2k and 2k+1 differ), so all but at
most four entries of any rectangle cancel and |s| <= 4.  Parity-split
formulas evaluate s from half-index prefix sums; they are cross-checked
against the direct count.  Suprema over all i are approximated by horizon
scans and reported with their horizon.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .words import SequenceKind, word


class ParityViolation(ValueError):
    """An even-index-only formula was fed an odd argument."""


@dataclass(frozen=True)
class ExcessProfile:
    m: int
    n: int
    horizon: int
    min_s: int
    max_s: int

    @property
    def balance(self) -> int:
        """Largest count_1 difference seen between two same-shape rectangles."""
        return (self.max_s - self.min_s) // 2


def _prefix(length: int) -> np.ndarray:
    return word(SequenceKind.THUE_MORSE).count_table(1, length)


def factor_sum(start: int, length: int) -> int:
    """Number of 1s among t_start .. t_{start+length-1}."""
    table = _prefix(start + length)
    return int(table[start + length] - table[start])


def excess(i: int, m: int, n: int) -> int:
    """2 * count_1(rectangle at i) - m*n, by direct row sums."""
    total = sum(factor_sum(i + k, n) for k in range(m))
    return 2 * total - m * n


def excess_vector(m: int, n: int, horizon: int) -> np.ndarray:
    """excess(i, m, n) for all i < horizon, vectorized."""
    s = _prefix(horizon + m + n)
    s2 = np.concatenate([[0], np.cumsum(s)])
    t = (
        s2[m + n : m + n + horizon]
        - s2[n : n + horizon]
        - s2[m : m + horizon]
        + s2[:horizon]
    )
    return 2 * t - m * n


def excess_even_even(i: int, m: int, n: int) -> int:
    """s = 2*(b - a) for i, m, n all even, where a sums t over
    [i/2, (i+m)/2) and b over [(i+n)/2, (i+m+n)/2)."""
    if i % 2 or m % 2 or n % 2:
        raise ParityViolation(f"all of i, m, n must be even: ({i}, {m}, {n})")
    if m == 0 or n == 0:
        return 0
    a = factor_sum(i // 2, (i + m) // 2 - i // 2)
    b = factor_sum((i + n) // 2, (i + m + n) // 2 - (i + n) // 2)
    return 2 * (b - a)


def excess_parity_reduced(i: int, m: int, n: int) -> int:
    """Excess via the parity-case formulas; odd i peels the first row."""
    if m == 0 or n == 0:
        return 0
    if i % 2:
        # removing the first row: s(i,m,n) = s(i+1,m-1,n) + 2*row - n
        row = factor_sum(i, n)
        return excess_parity_reduced(i + 1, m - 1, n) + 2 * row - n
    if m % 2 == 0 and n % 2 == 0:
        return excess_even_even(i, m, n)
    if m % 2 == 0:  # n odd: strip the last column
        a = excess_parity_reduced(i, m, n - 1)
        b = factor_sum(i + n - 1, m)
        return a + 2 * b - m
    if n % 2 == 0:  # m odd: strip the last row
        a = excess_parity_reduced(i, m - 1, n)
        b = factor_sum(i + m - 1, n)
        return a + 2 * b - n
    # both odd: strip the last column, then the last row
    a = excess_parity_reduced(i, m, n - 1)
    b = factor_sum(i + n - 1, m)
    return a + 2 * b - m


def default_horizon(m: int, n: int) -> int:
    """10^5, scaled up to 2**(ceil(log2(m*n)) + 6) for large rectangles."""
    scaled = 1 << (int(m * n - 1).bit_length() + 6)
    return max(100_000, scaled)


def excess_profile(m: int, n: int, horizon: int | None = None) -> ExcessProfile:
    """Min/max excess over i < horizon; the derived balance class is a
    horizon-bounded estimate of the true supremum spread."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be >= 1")
    if horizon is None:
        horizon = default_horizon(m, n)
    v = excess_vector(m, n, horizon)
    return ExcessProfile(m, n, horizon, int(v.min()), int(v.max()))


def excess_sign_symmetry(m: int, n: int, horizon: int = 100_000) -> bool:
    """Every excess value c seen below the horizon has -c seen below twice
    the horizon (the complemented rectangle realizes it)."""
    seen = set(np.unique(excess_vector(m, n, horizon)).tolist())
    mirror = set(np.unique(excess_vector(m, n, 2 * horizon)).tolist())
    return all(-c in mirror for c in seen)


def excess_class_parity_check(max_dim: int, horizon: int = 100_000) -> bool:
    """Balance class equals 3 exactly for odd m and odd n, 3 <= m, n <= max_dim.

    Odd m*n makes the excess odd (so at most 3 in absolute value); the scan
    confirms both that 3 is achieved there and never elsewhere.
    """
    if max_dim < 3:
        raise ValueError("max_dim must be >= 3")
    for m in range(3, max_dim + 1):
        for n in range(3, max_dim + 1):
            profile = excess_profile(m, n, horizon)
            if (profile.balance == 3) != (m % 2 == 1 and n % 2 == 1):
                return False
    return True
