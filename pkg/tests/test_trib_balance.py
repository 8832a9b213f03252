import random

import numpy as np
import pytest

from rectbal.rectangles import word_letter_counts
from rectbal.trib_balance import (
    NotFoundWithinLimit,
    balanced_2xn_list,
    corner_count_gap,
    find_corner_witness,
    two_balance_scan,
    verify_no_2balance_3plus,
)
from rectbal.words import SequenceKind, word


def test_single_row_rectangles_are_two_balanced():
    for n in range(1, 201, 7):
        report = two_balance_scan(1, n, horizon=100_000)
        assert report.two_balanced, n


def test_scan_examples():
    assert not two_balance_scan(2, 5, horizon=1_000_000).two_balanced
    assert two_balance_scan(2, 7, horizon=1_000_000).two_balanced


def test_definitive_witness_recounts():
    report = two_balance_scan(2, 5, horizon=1_000_000)
    assert report.definitive
    i, j, ci, cj = report.witness
    letter = report.unbalanced_letter
    w = word(SequenceKind.TRIBONACCI)
    assert word_letter_counts(w, i, 2, 5)[letter] == ci
    assert word_letter_counts(w, j, 2, 5)[letter] == cj
    assert ci - cj > 2


def test_balanced_2xn_list_prefixes():
    assert balanced_2xn_list(0) == []
    assert balanced_2xn_list(4, horizon=100_000) == [1, 2, 3, 4]


def test_scan_rejects_degenerate_shapes():
    with pytest.raises(ValueError):
        two_balance_scan(0, 3)


def test_letter_counts_match_naive():
    w = word(SequenceKind.TRIBONACCI)
    rng = random.Random(30)
    for _ in range(1000):
        i = rng.randrange(3000)
        m = rng.randrange(1, 21)
        n = rng.randrange(1, 21)
        counts = word_letter_counts(w, i, m, n)
        for letter in (0, 1, 2):
            naive = sum(
                1
                for k in range(m)
                for l in range(n)
                if w.symbol(i + k + l) == letter
            )
            assert counts[letter] == naive


def _check_witness_patterns(wit):
    w2 = word(SequenceKind.TRIBONACCI_RECODED)
    syms = w2.symbols(max(wit.i, wit.j) + wit.p + 5)
    assert np.array_equal(
        syms[wit.i : wit.i + wit.p], syms[wit.j : wit.j + wit.p]
    )
    assert list(syms[wit.i + wit.p : wit.i + wit.p + 5]) == [0, 0, 2, 0, 0]
    assert list(syms[wit.j + wit.p : wit.j + wit.p + 5]) == [0, 0, 0, 0, 0]


def test_corner_witness_small_p():
    for p in (0, 1, 2, 7):
        wit = find_corner_witness(p)
        assert wit.p == p
        _check_witness_patterns(wit)


def test_corner_witness_yields_letter2_gap_three():
    for m, n in [(3, 3), (3, 5), (5, 7), (4, 10)]:
        wit = find_corner_witness(m + n - 6)
        ci, cj = corner_count_gap(wit, m, n)
        assert ci - cj == 3


def test_corner_matrices_after_recoding():
    # the two rectangles agree except for the 3x3 lower-right corner, which
    # recodes to the antidiagonal-of-2s block versus all zeros
    m = n = 4
    wit = find_corner_witness(m + n - 6)
    w2 = word(SequenceKind.TRIBONACCI_RECODED)
    w2.ensure(max(wit.i, wit.j) + m + n)
    corner_i = [
        [w2.symbol(wit.i + k + l) for l in range(n - 3, n)]
        for k in range(m - 3, m)
    ]
    corner_j = [
        [w2.symbol(wit.j + k + l) for l in range(n - 3, n)]
        for k in range(m - 3, m)
    ]
    assert corner_i == [[0, 0, 2], [0, 2, 0], [2, 0, 0]]
    assert corner_j == [[0, 0, 0], [0, 0, 0], [0, 0, 0]]


def test_corner_gap_requires_matching_shape():
    wit = find_corner_witness(0)
    with pytest.raises(ValueError):
        corner_count_gap(wit, 4, 4)


def test_witness_search_limit_is_reported():
    with pytest.raises(NotFoundWithinLimit):
        find_corner_witness(40, search_limit=50)


def test_no_two_balance_for_three_plus_rows():
    assert verify_no_2balance_3plus(10)
