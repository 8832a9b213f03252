"""DFA over pair-digit alphabets, and inference of the balance automaton
from the exact verdict oracle.

The target language is the set of padded Zeckendorf pair encodings of
balanced (m, n).  Prefix classes are separated by bounded-depth residual
signatures (labels of every valid suffix continuation up to the
distinguishing depth), then the constructed machine is collapsed to its
Myhill-Nerode quotient.  Encodings with adjacent 1 digits in either track
never form states: the machine stays partial and a missing transition means
reject, so the reject sink is excluded from state counts.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .fib_balance import balance_table
from .numeration import fibonacci, pair_encode, zeck_decode
from .words import BudgetExceeded

SYMBOLS: tuple[tuple[int, int], ...] = ((0, 0), (0, 1), (1, 0), (1, 1))


class InconsistentSample(RuntimeError):
    """Replaying sampled labels through the machine disagreed with the oracle."""


@dataclass(frozen=True)
class Dfa:
    n_states: int
    start: int
    accepting: frozenset[int]
    transitions: dict[tuple[int, tuple[int, int]], int] = field(hash=False)

    def step(self, state: int, symbol: tuple[int, int]) -> int | None:
        return self.transitions.get((state, symbol))


def dfa_run(dfa: Dfa, word) -> bool:
    """Acceptance of a pair word; undefined transitions reject."""
    state = dfa.start
    for symbol in word:
        nxt = dfa.step(state, tuple(symbol))
        if nxt is None:
            return False
        state = nxt
    return state in dfa.accepting


def dfa_accepts_pair(dfa: Dfa, m: int, n: int) -> bool:
    return dfa_run(dfa, pair_encode(m, n))


# ---------------------------------------------------------------------------
# the labeled sample


class SampleTable:
    """Every valid padded pair encoding of length <= max_len, labeled by the
    exact balance verdict of the decoded pair.

    Labels are served from the exact verdict matrix rather than stored per
    word; `words()` enumerates the underlying word set.
    """

    def __init__(self, max_len: int, verdicts: np.ndarray):
        self.max_len = max_len
        self.verdicts = verdicts

    def label(self, word) -> bool:
        word = [tuple(sym) for sym in word]
        if len(word) > self.max_len:
            raise IndexError(f"word longer than sampled length {self.max_len}")
        m = zeck_decode("".join(str(a) for a, _ in word))
        n = zeck_decode("".join(str(b) for _, b in word))
        return bool(self.verdicts[m, n])

    def words(self, length: int):
        """All valid pair words of exactly the given length."""
        tracks = [t[0] for t in _tracks(length)]
        for dm in tracks:
            for dn in tracks:
                yield [(int(a), int(b)) for a, b in zip(dm, dn)]


def build_sample_table(max_len: int) -> SampleTable:
    """Label every valid pair encoding of length <= max_len."""
    if max_len > 18:
        raise BudgetExceeded(f"max_len {max_len} beyond the value budget (18)")
    limit = fibonacci(max_len + 2) - 1
    return SampleTable(max_len, balance_table(limit))


# ---------------------------------------------------------------------------
# suffix pools: valid single tracks and their pairings, by length


@lru_cache(maxsize=None)
def _tracks(t: int) -> tuple[tuple[str, int, int, int], ...]:
    """(digits, value, first digit, last digit) for every length-t track with
    no adjacent 1 digits; leading zeros allowed."""
    out: list[tuple[str, int, int, int]] = []

    def rec(prefix: str, last: int, val: int) -> None:
        if len(prefix) == t:
            out.append((prefix, val, int(prefix[0]), last))
            return
        rec(prefix + "0", 0, val)
        if last == 0:
            remaining = t - len(prefix)  # this digit carries weight F_{remaining+1}
            rec(prefix + "1", 1, val + fibonacci(remaining + 1))

    if t > 0:
        rec("", 0, 0)
    return tuple(out)


@lru_cache(maxsize=None)
def _suffix_pool(t: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """First digits and values of both tracks over all valid pair words of
    length t, as parallel arrays."""
    tracks = _tracks(t)
    vals = np.array([x[1] for x in tracks], dtype=np.int64)
    firsts = np.array([x[2] for x in tracks], dtype=np.int8)
    count = len(tracks)
    return (
        np.repeat(firsts, count),
        np.tile(firsts, count),
        np.repeat(vals, count),
        np.tile(vals, count),
    )


def _shifted_value(indices: tuple[int, ...], t: int) -> int:
    return sum(fibonacci(j + t) for j in indices)


def _signature(
    verdicts: np.ndarray,
    um: tuple[int, ...],
    un: tuple[int, ...],
    last_m: int,
    last_n: int,
    budget: int,
    depth: int,
) -> tuple:
    """Labels of every valid suffix continuation up to min(depth, budget).

    A suffix whose junction would create adjacent 1 digits is labeled False:
    the concatenation is not in the language.
    """
    sig: list = [bool(verdicts[_shifted_value(um, 0), _shifted_value(un, 0)])]
    for t in range(1, min(depth, budget) + 1):
        mf, nf, mv, nv = _suffix_pool(t)
        ok = np.ones(len(mf), dtype=bool)
        if last_m:
            ok &= mf == 0
        if last_n:
            ok &= nf == 0
        labels = np.zeros(len(mf), dtype=bool)
        msh = _shifted_value(um, t)
        nsh = _shifted_value(un, t)
        labels[ok] = verdicts[msh + mv[ok], nsh + nv[ok]]
        sig.append(labels.tobytes())
    return tuple(sig)


# ---------------------------------------------------------------------------
# inference


def infer_min_dfa(table: SampleTable, distinguish_depth: int) -> Dfa:
    """Quotient automaton of the sampled language under bounded-depth
    residual equivalence, minimized.

    Prefixes are explored breadth-first along valid-encoding transitions
    only.  Deeper prefixes have shorter suffix budgets; signatures compare
    on their common depth.  A final partition refinement merges any states
    the bounded signatures failed to identify and discards states equivalent
    to the reject sink.
    """
    if distinguish_depth > table.max_len:
        raise ValueError("distinguish_depth must be <= max_len")
    verdicts = table.verdicts
    reps: list[tuple] = []  # signature of each state's canonical prefix
    transitions: dict[tuple[int, tuple[int, int]], int] = {}
    accepting: set[int] = set()

    def match(sig: tuple) -> int | None:
        for state, rep in enumerate(reps):
            k = min(len(rep), len(sig))
            if rep[:k] == sig[:k]:
                return state
        return None

    start_sig = _signature(verdicts, (), (), 0, 0, table.max_len, distinguish_depth)
    reps.append(start_sig)
    if start_sig[0]:
        accepting.add(0)
    queue: deque = deque([(((), (), 0, 0, 0), 0)])
    while queue:
        (um, un, last_m, last_n, length), state = queue.popleft()
        for dm, dn in SYMBOLS:
            if (last_m and dm) or (last_n and dn):
                continue  # invalid continuation: reject sink, not a state
            um2 = tuple(j + 1 for j in um) + ((2,) if dm else ())
            un2 = tuple(j + 1 for j in un) + ((2,) if dn else ())
            if length + 1 > table.max_len:
                raise InconsistentSample(
                    "state exploration exhausted the sampled word length"
                )
            sig = _signature(
                verdicts, um2, un2, dm, dn, table.max_len - length - 1, distinguish_depth
            )
            target = match(sig)
            if target is None:
                target = len(reps)
                reps.append(sig)
                if sig[0]:
                    accepting.add(target)
                queue.append(((um2, un2, dm, dn, length + 1), target))
            elif len(sig) > len(reps[target]):
                reps[target] = sig
            transitions[(state, (dm, dn))] = target
    dfa = _minimize(len(reps), transitions, accepting)
    _replay_check(dfa, table)
    return dfa


def _minimize(
    n_states: int,
    transitions: dict[tuple[int, tuple[int, int]], int],
    accepting: set[int],
) -> Dfa:
    """Standard partition refinement with an implicit reject sink; the sink
    class is dropped from the result (undefined transition = reject)."""
    sink = n_states
    states = list(range(n_states + 1))
    part = {s: (1 if s in accepting else 0) for s in states}
    while True:
        keys = {}
        new_part = {}
        for s in states:
            succ = tuple(
                part[transitions.get((s, a), sink)] if s != sink else part[sink]
                for a in SYMBOLS
            )
            key = (part[s], succ)
            if key not in keys:
                keys[key] = len(keys)
            new_part[s] = keys[key]
        if new_part == part:
            break
        part = new_part
    sink_class = part[sink]
    # renumber reachable non-sink classes breadth-first from the start class
    number: dict[int, int] = {}
    reps: dict[int, int] = {}
    for s in range(n_states):  # first state of each class in BFS discovery order
        reps.setdefault(part[s], s)
    order: deque = deque()
    if part[0] != sink_class:
        number[part[0]] = 0
        order.append(part[0])
    new_transitions: dict[tuple[int, tuple[int, int]], int] = {}
    new_accepting: set[int] = set()
    while order:
        cls = order.popleft()
        s = reps[cls]
        if s in accepting:
            new_accepting.add(number[cls])
        for a in SYMBOLS:
            target = transitions.get((s, a))
            if target is None:
                continue
            tcls = part[target]
            if tcls == sink_class:
                continue
            if tcls not in number:
                number[tcls] = len(number)
                order.append(tcls)
            new_transitions[(number[cls], a)] = number[tcls]
    return Dfa(
        n_states=len(number),
        start=0,
        accepting=frozenset(new_accepting),
        transitions=new_transitions,
    )


def _replay_check(dfa: Dfa, table: SampleTable, max_replay_len: int = 7) -> None:
    """Replay the sampled words of small length; any label mismatch means the
    inference produced a machine inconsistent with its own sample."""
    for length in range(0, min(table.max_len, max_replay_len) + 1):
        if length == 0:
            words = [[]]
        else:
            words = table.words(length)
        for w in words:
            if dfa_run(dfa, w) != table.label(w):
                raise InconsistentSample(f"replay mismatch on {w}")


def state_count_stability(
    lens: list[int], depth: int = 10
) -> list[tuple[int, int]]:
    """Inferred state count per sample length; a repeated tail signals
    convergence."""
    if not lens:
        return []
    build_sample_table(max(lens))  # one verdict table serves every length
    out = []
    for max_len in lens:
        table = build_sample_table(max_len)
        dfa = infer_min_dfa(table, min(depth, max_len))
        out.append((max_len, dfa.n_states))
    return out


# ---------------------------------------------------------------------------
# serialization


def dfa_to_text(dfa: Dfa) -> str:
    lines = [
        f"states {dfa.n_states}",
        "start 0",
        "accepting " + " ".join(str(s) for s in sorted(dfa.accepting)),
    ]
    for (state, (a, b)), target in sorted(dfa.transitions.items()):
        lines.append(f"{state} [{a},{b}] -> {target}")
    return "\n".join(lines) + "\n"


def dfa_from_text(text: str) -> Dfa:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    n_states = int(lines[0].split()[1])
    start = int(lines[1].split()[1])
    accepting = frozenset(int(x) for x in lines[2].split()[1:])
    transitions: dict[tuple[int, tuple[int, int]], int] = {}
    for ln in lines[3:]:
        state_txt, sym_txt, _, target_txt = ln.split()
        a, b = sym_txt[1:-1].split(",")
        transitions[(int(state_txt), (int(a), int(b)))] = int(target_txt)
    return Dfa(n_states, start, accepting, transitions)
