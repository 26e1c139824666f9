"""RL-sequences: legality, components, enumeration, and the S-tables."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from treewalks.rlseq import (
    AlphabetError,
    EnumerationCapError,
    IllegalSequenceError,
    RLSequence,
    components,
    cumulative_s,
    enumerate_sequences,
    is_balanced_legal,
    s_closed_form,
    s_table_enumerated,
    s_table_recurrence,
)
from treewalks.triangles import catalan_entry, catalan_number


def test_is_balanced_legal_basics():
    assert is_balanced_legal("RRLL")
    assert is_balanced_legal("")
    assert not is_balanced_legal("RLLR")  # prefix RLL illegal
    assert not is_balanced_legal("RRL")  # unbalanced
    assert not is_balanced_legal("LR")


def test_invalid_alphabet_raises():
    with pytest.raises(AlphabetError):
        is_balanced_legal("RXL")
    with pytest.raises(AlphabetError):
        RLSequence("RLx ")


def test_illegal_sequence_rejected_by_constructor():
    with pytest.raises(IllegalSequenceError):
        RLSequence("RLLR")
    with pytest.raises(IllegalSequenceError):
        RLSequence("R")


@given(st.text(alphabet="RL", max_size=24))
def test_balanced_legal_matches_reference(word):
    # reference: balanced by counting, legal by prefix minima
    balanced = word.count("R") == word.count("L")
    legal = True
    h = 0
    for ch in word:
        h += 1 if ch == "R" else -1
        legal = legal and h >= 0
    assert is_balanced_legal(word) == (balanced and legal)


def test_string_round_trip():
    for word in ["", "RL", "RRLLRL", "RRRLLL"]:
        assert str(RLSequence(word)) == word


@pytest.mark.parametrize(
    "word,expected",
    [
        ("RRLLRL", ["RRLL", "RL"]),
        ("RLRLRL", ["RL", "RL", "RL"]),
        ("RRRLLL", ["RRRLLL"]),
        ("", []),
    ],
)
def test_components(word, expected):
    decomp = components(word)
    assert [str(c) for c in decomp.components] == expected
    assert str(decomp.concatenation()) == word


def test_components_rejects_illegal():
    with pytest.raises(IllegalSequenceError):
        components("RLLR")


def test_component_pieces_are_arch_shaped():
    for seq in enumerate_sequences(6):
        for piece in components(seq).components:
            s = str(piece)
            assert s[0] == "R" and s[-1] == "L"
            # touches height 0 only at its own ends
            h = 0
            for ch in s[:-1]:
                h += 1 if ch == "R" else -1
                assert h > 0 or ch == s[0]


def test_enumeration_counts_and_order():
    assert [str(s) for s in enumerate_sequences(2)] == ["RRLL", "RLRL"]
    assert [str(s) for s in enumerate_sequences(0)] == [""]
    for n in range(9):
        seqs = enumerate_sequences(n)
        assert len(seqs) == catalan_number(n)
        assert len(set(seqs)) == len(seqs)
        words = [str(s) for s in seqs]
        assert words == sorted(words, key=lambda w: [0 if c == "R" else 1 for c in w])
        assert all(is_balanced_legal(w) for w in words)


def test_enumeration_component_multiset_n3():
    counts = sorted(s.component_count for s in enumerate_sequences(3))
    assert counts == [1, 1, 2, 2, 3]


def test_enumeration_cap():
    with pytest.raises(EnumerationCapError):
        enumerate_sequences(9, cap=8)
    assert len(enumerate_sequences(9, cap=9)) == catalan_number(9)
    with pytest.raises(EnumerationCapError):
        s_table_enumerated(9, cap=8)


def test_s_table_enumerated_small_values():
    table = s_table_enumerated(3)
    assert table.s(1, 1) == 1
    assert table.s(2, 1) == 1 and table.s(2, 2) == 1
    assert table.row(3) == [2, 2, 1]


def test_s_table_recurrence_values():
    table = s_table_recurrence(4)
    assert table.s(3, 2) == table.s(2, 1) + table.s(2, 2) == 2
    for n in range(1, 5):
        assert table.s(n, n) == 1
    assert sum(table.row(4)) == 14


def test_s_closed_form_values():
    assert s_closed_form(3, 1) == 2
    assert s_closed_form(4, 2) == 5
    for n in range(1, 10):
        assert s_closed_form(n, n) == 1
    with pytest.raises(IndexError):
        s_closed_form(3, 0)
    with pytest.raises(IndexError):
        s_closed_form(3, 4)


def test_three_routes_agree_to_n12():
    enum = s_table_enumerated(12)
    rec = s_table_recurrence(12)
    for n in range(1, 13):
        for k in range(1, n + 1):
            assert enum.s(n, k) == rec.s(n, k) == s_closed_form(n, k)


def test_row_sums_are_catalan():
    rec = s_table_recurrence(12)
    for n in range(1, 13):
        assert sum(rec.s(n, k) for k in range(1, n + 1)) == catalan_number(n)


def test_cumulative_s():
    assert cumulative_s(0, 1) == 1
    assert cumulative_s(2, 2) == 2 == catalan_entry(2, 1)
    assert cumulative_s(3, 3) == 3 == catalan_entry(3, 1)
    # identity with the Catalan triangle: sum_{j>=k-1} S(n-1, j) = C(n-1, n-k)
    for n in range(1, 11):
        for k in range(1, n + 1):
            assert cumulative_s(n - 1, k) == catalan_entry(n - 1, n - k)
    with pytest.raises(IndexError):
        cumulative_s(3, 5)
    with pytest.raises(IndexError):
        cumulative_s(3, 0)


def test_stable_serialization_round_trip():
    import json

    table = s_table_recurrence(5)
    parsed = json.loads(table.to_json())
    assert parsed[0] == ["1"]
    assert [int(e) for e in parsed[5]] == table.row(5)
    assert table.to_csv().splitlines()[3] == "2,2,1"
