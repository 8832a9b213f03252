import pytest

from rectbal.dfa_tools import (
    Dfa,
    build_sample_table,
    dfa_accepts_pair,
    dfa_from_text,
    dfa_run,
    dfa_to_text,
    infer_min_dfa,
    state_count_stability,
)
from rectbal.fib_balance import is_balanced
from rectbal.numeration import fibonacci, pair_encode
from rectbal.words import BudgetExceeded


def test_sample_table_labels():
    table = build_sample_table(6)
    assert table.label(pair_encode(4, 3)) is True
    assert table.label(pair_encode(0, 0)) is True
    assert table.label(pair_encode(4, 4)) is False


def test_sample_table_word_counts():
    table = build_sample_table(5)
    for length in (1, 2, 3, 4):
        words = list(table.words(length))
        tracks = fibonacci(length + 2)
        assert len(words) == tracks * tracks
        for w in words:
            assert len(w) == length


def test_sample_table_budget():
    with pytest.raises(BudgetExceeded):
        build_sample_table(19)


def test_inference_small_replays_oracle():
    table = build_sample_table(8)
    dfa = infer_min_dfa(table, 6)
    assert dfa.n_states <= 15
    for m in range(51):
        for n in range(51):
            assert dfa_accepts_pair(dfa, m, n) == is_balanced(m, n), (m, n)


def test_inference_accepts_worked_example():
    table = build_sample_table(8)
    dfa = infer_min_dfa(table, 6)
    assert dfa_run(dfa, [])  # (0, 0) is balanced
    assert dfa_accepts_pair(dfa, 4, 18)
    assert not dfa_accepts_pair(dfa, 4, 4)


def test_padding_invariance():
    table = build_sample_table(8)
    dfa = infer_min_dfa(table, 6)
    for m, n in [(4, 18), (4, 3), (4, 4), (7, 7)]:
        w = pair_encode(m, n)
        assert dfa_run(dfa, w) == dfa_run(dfa, [(0, 0)] * 3 + w)


def test_depth_bounded_by_length():
    table = build_sample_table(4)
    with pytest.raises(ValueError):
        infer_min_dfa(table, 5)


def test_undefined_transition_rejects():
    toy = Dfa(2, 0, frozenset({1}), {(0, (0, 1)): 1})
    assert dfa_run(toy, [(0, 1)])
    assert not dfa_run(toy, [(1, 1)])
    assert not dfa_run(toy, [(0, 1), (0, 1)])


def test_serialization_round_trip():
    table = build_sample_table(8)
    dfa = infer_min_dfa(table, 6)
    text = dfa_to_text(dfa)
    back = dfa_from_text(text)
    assert back.n_states == dfa.n_states
    assert back.accepting == dfa.accepting
    assert back.transitions == dfa.transitions
    for m in range(25):
        for n in range(25):
            assert dfa_accepts_pair(back, m, n) == dfa_accepts_pair(dfa, m, n)


def test_state_count_stability_shape():
    counts = state_count_stability([6, 8], depth=6)
    assert [length for length, _ in counts] == [6, 8]
    assert all(c <= 15 for _, c in counts)


def test_sample_table_is_virtual_but_faithful():
    table = build_sample_table(5)
    for length in (1, 2, 3):
        for w in table.words(length):
            m = sum(fibonacci(len(w) - pos + 1) for pos, (a, _) in enumerate(w) if a)
            n = sum(fibonacci(len(w) - pos + 1) for pos, (_, b) in enumerate(w) if b)
            assert table.label(w) == is_balanced(m, n)


def test_label_rejects_overlong_words():
    table = build_sample_table(4)
    with pytest.raises(IndexError):
        table.label([(0, 0)] * 5)
