"""Balance of Fibonacci-word rectangles.

Three mutually independent routes decide whether the m x n rectangle sums
T(i, m, n) take at most two distinct values over all i:

* ``exact_balance`` reduces the quantifier over all i to finitely many arcs
  of the unit circle cut by the points frac(-j*gamma), via the identity
  T(i, m, n) = m*floor(n*gamma) + #{k < m : frac((i+k)*gamma) >= beta} with
  beta = 1 - frac(n*gamma).  This is a true decision procedure.
* ``delta_block_scan`` streams the difference sequence T(i+1)-T(i) in
  {-1, 0, 1} looking for two equal nonzero entries separated only by zeros,
  which certifies a T-gap of 2; a semi-decision run to a horizon.
* ``zeck_characterization`` evaluates a digit-level rule on the Zeckendorf
  expansions of m and n.

The circle route is implemented on integer tables: floor(j*gamma) via
integer square roots, and the cyclic order of frac(j*gamma) via exact
integer keys floor(j*Q*gamma) - Q*floor(j*gamma) (distinct and order-true
because consecutive multiples of gamma stay at circle distance > 1/(3*j)).
"""
from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from math import isqrt

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .exact_quadratic import GAMMA, ONE, QuadraticValue
from .numeration import fib_index_list, fibonacci
from .rectangles import word_rect_sum
from .words import BudgetExceeded, SequenceKind, sturmian_a_word, word


class BalanceStatus(Enum):
    BALANCED = "balanced"
    UNBALANCED = "unbalanced"
    UNKNOWN_UP_TO_HORIZON = "unknown-up-to-horizon"


@dataclass(frozen=True)
class BalanceVerdict:
    status: BalanceStatus
    method: str
    value_set: tuple[int, ...] | None = None
    witness: tuple[int, int, int, int] | None = None  # (i, j, T(i), T(j))
    horizon: int | None = None

    @property
    def balanced(self) -> bool:
        return self.status is BalanceStatus.BALANCED


@dataclass(frozen=True)
class CirclePartition:
    """Breakpoints frac(-j*gamma), j in [0, m) u [n, n+m), with the value of
    the arc counting function immediately to the right of each breakpoint."""

    breakpoints: tuple[QuadraticValue, ...]
    arc_values: tuple[int, ...]


# ---------------------------------------------------------------------------
# integer tables for floor(j*gamma) and the cyclic order of frac(j*gamma)


def _floor_gamma_int(n: int) -> int:
    # floor(n*gamma) = 2n - floor(n*phi) - 1 for n >= 1
    if n == 0:
        return 0
    return 2 * n - (n + isqrt(5 * n * n)) // 2 - 1


def _gamma_array(limit: int) -> np.ndarray:
    """g[j] = floor(j*gamma) for 0 <= j <= limit, exact int64."""
    j = np.arange(limit + 1, dtype=np.int64)
    x = 5 * j * j
    r = np.sqrt(x.astype(np.float64)).astype(np.int64)
    for _ in range(3):
        r = np.where(r * r > x, r - 1, r)
        r = np.where((r + 1) * (r + 1) <= x, r + 1, r)
    assert bool(np.all((r * r <= x) & ((r + 1) * (r + 1) > x)))
    g = 2 * j - (j + r) // 2 - 1
    g[0] = 0
    return g


class _GammaTables:
    """Grow-on-demand caches: g, its running sum G, and circle ranks."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._g = _gamma_array(1 << 12)
        self._G = np.concatenate([[0], np.cumsum(self._g)])
        self._rank = np.zeros(0, dtype=np.int32)

    def g(self, limit: int) -> np.ndarray:
        with self._lock:
            if limit >= len(self._g):
                self._g = _gamma_array(max(limit, 2 * len(self._g)))
                self._G = np.concatenate([[0], np.cumsum(self._g)])
            return self._g

    def G(self, limit: int) -> np.ndarray:
        self.g(limit)
        return self._G

    def rank(self, jmax: int) -> np.ndarray:
        """rank[j] = position of frac(j*gamma) in the sorted order over j <= jmax."""
        with self._lock:
            if jmax < len(self._rank):
                return self._rank
            size = max(jmax + 1, 2 * len(self._rank), 1 << 10)
            q = 4 * size
            keys = np.empty(size, dtype=np.int64)
            for j in range(size):
                keys[j] = _floor_gamma_int(j * q) - q * _floor_gamma_int(j)
            rank = np.empty(size, dtype=np.int32)
            rank[np.argsort(keys)] = np.arange(size, dtype=np.int32)
            self._rank = rank
            return self._rank


_TABLES = _GammaTables()


def t_value(i: int, m: int, n: int) -> int:
    """T(i, m, n) on the 0-prefixed Fibonacci word from the floor tables."""
    G = _TABLES.G(i + m + n)
    return int(G[i + m + n] - G[i + n] - G[i + m] + G[i])


def t_value_vector(m: int, n: int, horizon: int) -> np.ndarray:
    """T(i, m, n) for all i < horizon, via the double-telescoped floor sums."""
    G = _TABLES.G(horizon + m + n)
    return G[m + n : m + n + horizon] - G[n : n + horizon] - G[m : m + horizon] + G[:horizon]


def delta_floor_form(i: int, m: int, n: int) -> int:
    """T(i+1,m,n) - T(i,m,n) as the four-floor combination."""
    g = _TABLES.g(i + m + n)
    return int((g[i + m + n] - g[i + n]) - (g[i + m] - g[i]))


# ---------------------------------------------------------------------------
# circle sweep


def _sweep(mu: int, nu: int) -> tuple[int, int, int]:
    """(min, max, anchor) of the cyclic counting function for mu <= nu.

    Events are -1 at rank of frac(j*gamma) for j < mu and +1 for
    nu <= j < nu + mu; the cumulative sums in rank order, subtracted from the
    anchor T(0, mu, nu), enumerate the achieved T values.
    """
    rank = _TABLES.rank(nu + mu)
    pos = np.concatenate([rank[:mu], rank[nu : nu + mu]])
    sig = np.concatenate(
        [np.full(mu, -1, dtype=np.int32), np.ones(mu, dtype=np.int32)]
    )
    c = np.cumsum(sig[np.argsort(pos)])
    return int(c.min()), int(c.max()), t_value(0, mu, nu)


def value_set(m: int, n: int) -> tuple[int, ...]:
    """All values taken by T(i, m, n) over i >= 0, ascending."""
    if m == 0 or n == 0:
        return (0,)
    mu, nu = min(m, n), max(m, n)
    lo, hi, t0 = _sweep(mu, nu)
    return tuple(range(t0 - hi, t0 - lo + 1))


def distinct_value_count(m: int, n: int) -> int:
    """Cardinality of the exact T-value set."""
    return len(value_set(m, n))


def is_balanced(m: int, n: int) -> bool:
    """Exact verdict without witness construction."""
    if m == 0 or n == 0:
        return True
    mu, nu = min(m, n), max(m, n)
    lo, hi, _ = _sweep(mu, nu)
    return hi - lo <= 1


def _find_witness(m: int, n: int) -> tuple[int, int, int, int]:
    """Indices (i, j) with |T(i)-T(j)| >= 2 for an unbalanced pair."""
    horizon = 8 * (m + n) + 64
    while True:
        t = t_value_vector(m, n, horizon)
        i = int(np.argmin(t))
        j = int(np.argmax(t))
        if t[j] - t[i] >= 2:
            if i > j:
                i, j = j, i
            return i, j, int(t_value(i, m, n)), int(t_value(j, m, n))
        if horizon > 1 << 26:  # unreachable for genuinely unbalanced pairs
            raise RuntimeError(f"no witness found for ({m}, {n})")
        horizon *= 4


def exact_balance(m: int, n: int) -> BalanceVerdict:
    """Decide balance by the circle partition; unbalanced verdicts carry a
    witness pair of rectangle indices."""
    vals = value_set(m, n)
    if len(vals) <= 2:
        return BalanceVerdict(BalanceStatus.BALANCED, "exact", value_set=vals)
    return BalanceVerdict(
        BalanceStatus.UNBALANCED,
        "exact",
        value_set=vals,
        witness=_find_witness(m, n),
    )


def circle_partition(m: int, n: int) -> CirclePartition:
    """Exact-arithmetic construction of the breakpoints and arc values.

    Slow reference route on QuadraticValue; the integer sweep must agree
    with it.  Arc values are evaluated at each breakpoint with the >= rule,
    i.e. as right limits.
    """
    if m == 0 or n == 0:
        raise ValueError("partition needs m, n >= 1")
    beta = ONE - (GAMMA * n).frac()
    # the two index ranges overlap when m > n; keep each point once
    points = sorted(
        {(GAMMA * (-j)).frac() for j in [*range(m), *range(n, n + m)]}
    )
    arc_values = []
    for p in points:
        count = 0
        for k in range(m):
            diff = (p + GAMMA * k).frac() - beta
            if diff.sign() >= 0:
                count += 1
        arc_values.append(count)
    return CirclePartition(tuple(points), tuple(arc_values))


def t_counting_form(i: int, m: int, n: int) -> int:
    """T(i, m, n) = m*floor(n*gamma) + #{k < m : frac((i+k)*gamma) >= beta}.

    Evaluated on exact quadratic values.  Equality with beta is impossible
    for i + k + n >= 1; a defensive assertion guards that.
    """
    if m == 0 or n == 0:
        return 0
    beta = ONE - (GAMMA * n).frac()
    count = 0
    for k in range(m):
        s = ((GAMMA * (i + k)).frac() - beta).sign()
        assert s != 0 or i + k + n == 0, "threshold hit exactly off the origin"
        if s >= 0:
            count += 1
    return m * (GAMMA * n).floor() + count


# ---------------------------------------------------------------------------
# difference-sequence scan (independent of the floor tables: runs on the
# morphism-generated word)


def delta_block_scan(m: int, n: int, horizon: int = 100_000) -> BalanceVerdict:
    """Scan T(i+1)-T(i) for i < horizon for a block a,0,...,0,a with a = +-1.

    Such a block forces T(j+1) = T(i) + 2a, an unbalance certificate; its
    absence up to the horizon is reported as unknown, not as balanced.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    if m == 0 or n == 0:
        return BalanceVerdict(
            BalanceStatus.UNKNOWN_UP_TO_HORIZON, "scan", horizon=horizon
        )
    w = sturmian_a_word()
    s = w.count_table(1, horizon + m + n + 1)
    s2 = np.concatenate([[0], np.cumsum(s)])

    def tvec(count: int) -> np.ndarray:
        return (
            s2[m + n : m + n + count]
            - s2[n : n + count]
            - s2[m : m + count]
            + s2[:count]
        )

    t = tvec(horizon + 1)
    d = np.diff(t)
    assert d.size == 0 or (int(d.min()) >= -1 and int(d.max()) <= 1)
    nz = np.flatnonzero(d)
    if len(nz) >= 2:
        vals = d[nz]
        hits = np.flatnonzero(vals[:-1] == vals[1:])
        if len(hits):
            u = int(hits[0])
            i, j = int(nz[u]), int(nz[u + 1]) + 1
            ti, tj = int(t[i]), int(t[j])
            assert abs(tj - ti) == 2
            return BalanceVerdict(
                BalanceStatus.UNBALANCED,
                "scan",
                witness=(i, j, ti, tj),
                horizon=horizon,
            )
    return BalanceVerdict(
        BalanceStatus.UNKNOWN_UP_TO_HORIZON, "scan", horizon=horizon
    )


# ---------------------------------------------------------------------------
# Zeckendorf digit rule


def zeck_characterization(m: int, n: int) -> bool:
    """Digit-level balance rule on the Zeckendorf expansions, for m <= n
    (larger m handled by the transpose symmetry):

    (a) m <= 1; or with m = F_a1 + ... (a1 largest) and n = F_b1 + ... + F_bl:
    (b) m = F_a1, a1 not among the b's, and the smallest b above a1 has the
        parity of a1;
    (c) m = F_a1 and a1 is among the b's;
    (d) a1 equals the smallest b and the two smallest b's differ in parity;
    (e) a1 is below the smallest b.
    """
    if m > n:
        m, n = n, m
    if m <= 1:
        return True
    a = fib_index_list(m).indices
    b = fib_index_list(n).indices
    a1 = a[0]
    b_smallest = b[-1]
    if len(a) == 1 and a1 in b:
        return True
    if a1 < b_smallest:
        return True
    if len(a) == 1 and a1 not in b:
        above = [x for x in b if x > a1]
        # m = F_a1 <= n forces some b above a1, but guard anyway
        if above and (min(above) - a1) % 2 == 0:
            return True
    if a1 == b_smallest and len(b) >= 2 and (b[-2] - b[-1]) % 2 == 1:
        return True
    return False


# ---------------------------------------------------------------------------
# square-rectangle growth identities (direct word computation)


def diverse_identities_check(k: int) -> bool:
    """Verify the two square-rectangle sum gaps at the k-th scale by direct
    computation on the plain Fibonacci word: the gap at side F_{6k}/2 is 2k
    and at side F_{6k+3}/2 is 2k+1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    f = word(SequenceKind.FIBONACCI)
    i1 = (fibonacci(6 * k - 1) - 1) // 4
    i2 = (fibonacci(6 * k + 2) - 1) // 4
    side = fibonacci(6 * k) // 2
    j1 = (fibonacci(6 * k + 5) - 1) // 4
    side2 = fibonacci(6 * k + 3) // 2
    need = max(i1, i2, j1) + 2 * max(side, side2)
    if need > f.budget:
        raise BudgetExceeded(
            f"identities at k={k} need {need} symbols, budget {f.budget}"
        )
    gap1 = word_rect_sum(f, i1, side, side) - word_rect_sum(f, i2, side, side)
    gap2 = word_rect_sum(f, j1, side2, side2) - word_rect_sum(f, i2, side2, side2)
    return gap1 == 2 * k and gap2 == 2 * k + 1


# ---------------------------------------------------------------------------
# batched sweeps


def row_value_spans(mu: int, nu_hi: int) -> np.ndarray:
    """Spans (max - min of the cyclic counting function) for all nu in
    [mu, nu_hi], vectorized.  Balanced iff span <= 1."""
    if mu == 0:
        return np.zeros(nu_hi - mu + 1, dtype=np.int32)
    rank = _TABLES.rank(nu_hi + mu)
    windows = sliding_window_view(rank, mu)[mu : nu_hi + 1]
    batch = windows.shape[0]
    pos = np.empty((batch, 2 * mu), dtype=np.int32)
    pos[:, :mu] = rank[:mu]
    pos[:, mu:] = windows
    sig = np.concatenate(
        [np.full(mu, -1, dtype=np.int16), np.ones(mu, dtype=np.int16)]
    )
    steps = sig[np.argsort(pos, axis=1)]
    c = np.cumsum(steps, axis=1, dtype=np.int16)
    return (c.max(axis=1) - c.min(axis=1)).astype(np.int32)


_TABLE_CACHE: dict[int, np.ndarray] = {}
_TABLE_LOCK = threading.Lock()


def balance_table(limit: int, jobs: int | None = None) -> np.ndarray:
    """Symmetric boolean matrix of exact balance verdicts for m, n <= limit.

    Built once per process with the circle sweep batched row by row; rows
    distribute across threads (argsort releases the GIL) and merge in index
    order, so the result is deterministic.
    """
    with _TABLE_LOCK:
        for have, table in _TABLE_CACHE.items():
            if have >= limit:
                return table[: limit + 1, : limit + 1]
    out = np.zeros((limit + 1, limit + 1), dtype=bool)
    out[0, :] = True
    out[:, 0] = True

    def fill(mu: int) -> None:
        out[mu, mu:] = row_value_spans(mu, limit) <= 1

    _TABLES.rank(2 * limit)  # build shared tables before threading
    _TABLES.G(2 * limit)
    workers = jobs or 2
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(fill, range(1, limit + 1)))
    else:
        for mu in range(1, limit + 1):
            fill(mu)
    lower = np.tril_indices(limit + 1, -1)
    out[lower] = out.T[lower]
    out.flags.writeable = False
    with _TABLE_LOCK:
        _TABLE_CACHE[limit] = out
    return out
