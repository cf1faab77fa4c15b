from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cupsq import (DimensionMismatch, IndexTuple, InvalidTuple, MalformedPair,
                   apply_minus, apply_plus, blocks, face, merge, split,
                   tuple_of_word, word_of)


def all_words(max_len):
    for length in range(1, max_len + 1):
        for letters in product("01", repeat=length):
            yield "".join(letters)


def test_word_of_printed_examples():
    assert word_of(IndexTuple((2, 5), 6)) == "1101101"
    assert word_of(IndexTuple((0, 1, 4), 4)) == "00110"
    assert word_of(IndexTuple((0,), 0)) == "0"


def test_tuple_of_word_inverts_word_of():
    for w in all_words(10):
        if "0" not in w:
            continue
        assert word_of(tuple_of_word(w)) == w


def test_invalid_tuples_rejected():
    with pytest.raises(InvalidTuple):
        IndexTuple((2, 2), 5)
    with pytest.raises(InvalidTuple):
        IndexTuple((3, 1), 5)
    with pytest.raises(InvalidTuple):
        IndexTuple((0, 7), 5)
    with pytest.raises(InvalidTuple):
        IndexTuple((), 5)


def test_blocks():
    assert blocks("1101101") == ["110", "110", "1"]
    assert blocks("00110") == ["0", "0", "110"]
    assert blocks("111101011") == ["11110", "10", "11"]
    assert blocks("011100") == ["0", "1110", "0"]


def test_split_printed_examples():
    assert split("1101101") == ("110", "1101")
    assert split("00110") == ("0", "0110")


def test_split_single_marker_words():
    # word of (p)_{p+q}: block 0 = 1^p 0 goes to minus, block 1 = 1^q to plus
    for p in range(4):
        for q in range(4):
            w = word_of(IndexTuple((p,), p + q))
            assert split(w) == ("1" * q, "1" * p + "0")


def test_merge_printed_example():
    assert merge("111101011", "011100") == IndexTuple((0, 5, 9, 11, 12), 14)


def test_merge_split_round_trip_exhaustive():
    for w in all_words(12):
        if "0" not in w:
            continue
        plus, minus = split(w)
        assert word_of(merge(plus, minus)) == w


def test_merge_rejects_malformed_pairs():
    with pytest.raises(MalformedPair):
        merge("0", "11")        # minus has no zero
    with pytest.raises(MalformedPair):
        merge("0011", "0")      # interleaving does not split back


def test_apply_segment_examples():
    t = IndexTuple((1,), 2)
    x = (10, 11, 12)
    assert apply_plus(t, x) == (10, 11)
    assert apply_minus(t, x) == (11, 12)

    t = IndexTuple((0, 1), 1)
    assert apply_plus(t, (4, 7)) == (4, 7)
    assert apply_minus(t, (4, 7)) == (4, 7)

    # plus deletes the 1-letters of odd blocks {3,4}, minus those of the
    # even blocks {0,1} and {6}
    t = IndexTuple((2, 5), 6)
    x = tuple(range(7))
    assert apply_plus(t, x) == (0, 1, 2, 5, 6)
    assert apply_minus(t, x) == (2, 3, 4, 5)


def test_apply_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        apply_plus(IndexTuple((1,), 2), (0, 1))


index_tuples = st.integers(1, 10).flatmap(
    lambda m: st.sets(st.integers(0, m), min_size=1).map(
        lambda zs: IndexTuple(tuple(sorted(zs)), m)))


def _positions_by_block_parity(word):
    """Original positions of the 1-letters, keyed by block parity —
    derived by scanning the word, independently of the index arithmetic."""
    offset = 0
    odd, even = [], []
    for j, b in enumerate(blocks(word)):
        ones = [offset + k for k, ch in enumerate(b) if ch == "1"]
        (odd if j % 2 else even).extend(ones)
        offset += len(b)
    return odd, even


@given(index_tuples)
def test_apply_equals_descending_face_composition(t):
    x = tuple(range(100, 100 + t.m + 1))
    odd_ones, even_ones = _positions_by_block_parity(word_of(t))
    plus = x
    for k in sorted(odd_ones, reverse=True):
        plus = face(k, plus)
    minus = x
    for k in sorted(even_ones, reverse=True):
        minus = face(k, minus)
    assert apply_plus(t, x) == plus
    assert apply_minus(t, x) == minus


@given(index_tuples)
def test_faces_partition_around_the_marks(t):
    x = tuple(range(50, 50 + t.m + 1))
    plus, minus = apply_plus(t, x), apply_minus(t, x)
    p_word, m_word = split(word_of(t))
    assert len(x) - len(plus) == p_word.count("1")
    assert len(x) - len(minus) == m_word.count("1")
    assert p_word.count("1") + m_word.count("1") == t.m - t.n
    assert set(plus) | set(minus) == set(x)
    assert set(plus) & set(minus) == {x[i] for i in t.indices}
