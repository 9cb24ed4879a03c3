import hypothesis.strategies as st
import pytest
from hypothesis import given

from delrecon import (
    CapacityError,
    EMPTY,
    RunProfile,
    Word,
    alternating,
    block_deletion_family,
    complement,
    concat,
    delete_positions,
    extremal_pair,
    parse_word,
    prefix,
    reverse,
    runs,
    seed_pair,
    suffix,
)

from _strategies import words


def test_parse_examples():
    assert parse_word("10") == Word(2, 0b10)
    assert parse_word("") == EMPTY
    assert parse_word("101010").length == 6
    assert str(parse_word("001101")) == "001101"


def test_parse_rejects_invalid_characters():
    with pytest.raises(ValueError):
        parse_word("10a10")
    with pytest.raises(ValueError):
        parse_word("10 01")


def test_parse_rejects_over_capacity():
    parse_word("0" * 64)
    with pytest.raises(CapacityError):
        parse_word("0" * 65)


def test_word_validation():
    with pytest.raises(ValueError):
        Word(2, 4)
    with pytest.raises(CapacityError):
        Word(-1, 0)
    with pytest.raises(CapacityError):
        Word(65, 0)


def test_words_of_different_length_never_equal():
    assert Word(2, 1) != Word(3, 1)
    assert Word(0, 0) != Word(1, 0)
    assert len({Word(2, 1), Word(3, 1), Word(4, 1)}) == 3


def test_bit_indexing_is_one_based_from_left():
    w = parse_word("100")
    assert (w.bit(1), w.bit(2), w.bit(3)) == (1, 0, 0)
    with pytest.raises(IndexError):
        w.bit(0)
    with pytest.raises(IndexError):
        w.bit(4)


@given(words())
def test_text_round_trips(w):
    assert parse_word(w.text()) == w
    assert len(w) == w.length


def test_runs_examples():
    assert runs(parse_word("101010")).run_count == 6
    assert runs(parse_word("011001")).run_count == 4
    assert runs(parse_word("0000")) == RunProfile(1, (4,))
    assert runs(EMPTY) == RunProfile(0, ())


@given(words())
def test_run_lengths_partition_the_word(w):
    profile = runs(w)
    assert sum(profile.run_lengths) == w.length
    assert all(length > 0 for length in profile.run_lengths)
    if w.length:
        assert 1 <= profile.run_count <= w.length
    else:
        assert profile.run_count == 0


def test_alternating_examples():
    assert str(alternating(4, 1)) == "1010"
    assert alternating(0, 1) == EMPTY
    assert str(alternating(3, 0)) == "010"
    assert runs(alternating(12, 1)).run_count == 12


def test_alternating_rejects_bad_arguments():
    with pytest.raises(ValueError):
        alternating(-1, 1)
    with pytest.raises(ValueError):
        alternating(3, 2)
    with pytest.raises(CapacityError):
        alternating(65, 1)


def test_seed_pair_examples():
    assert tuple(map(str, seed_pair(1))) == ("10", "01")
    assert tuple(map(str, seed_pair(2))) == ("101010", "011001")
    a4, b4 = seed_pair(4)
    assert str(a4) == "10101010101010"
    assert str(b4) == "01100110011001"


@pytest.mark.parametrize("ell", range(1, 16))
def test_seed_pair_lengths_and_run_counts(ell):
    a, b = seed_pair(ell)
    assert a.length == b.length == 4 * ell - 2
    assert runs(a).run_count == 4 * ell - 2
    assert runs(b).run_count == 2 * ell


def test_seed_pair_bounds():
    with pytest.raises(ValueError):
        seed_pair(0)
    seed_pair(16)
    with pytest.raises(CapacityError):
        seed_pair(17)


def test_extremal_pair_examples():
    assert tuple(map(str, extremal_pair(6, 2))) == ("101010", "011001")
    assert tuple(map(str, extremal_pair(8, 2))) == ("10101010", "01100110")
    assert tuple(map(str, extremal_pair(2, 1))) == ("10", "01")


def test_extremal_pair_requires_room_for_the_seed():
    with pytest.raises(ValueError):
        extremal_pair(5, 2)


@pytest.mark.parametrize("ell,n", [(1, 7), (2, 9), (3, 13)])
def test_extremal_pair_is_seed_plus_shared_alternating_tail(ell, n):
    a, b = seed_pair(ell)
    x, y = extremal_pair(n, ell)
    assert x.length == y.length == n
    assert prefix(x, a.length) == a
    assert prefix(y, b.length) == b
    tail = suffix(x, n - a.length)
    assert tail == suffix(y, n - b.length) == alternating(n - a.length, 1)


def test_prefix_concat_examples():
    assert str(prefix(parse_word("101010"), 3)) == "101"
    assert str(concat(parse_word("10"), parse_word("01"))) == "1001"
    assert str(complement(parse_word("10"))) == "01"
    with pytest.raises(IndexError):
        prefix(parse_word("10"), 3)
    with pytest.raises(CapacityError):
        concat(parse_word("0" * 40), parse_word("0" * 40))


@given(words())
def test_complement_and_reverse_are_involutions(w):
    assert complement(complement(w)) == w
    assert reverse(reverse(w)) == w


@given(words(), st.data())
def test_prefix_suffix_reassemble(w, data):
    i = data.draw(st.integers(0, w.length))
    assert concat(prefix(w, i), suffix(w, w.length - i)) == w
    assert prefix(w, w.length) == w


@given(words(min_len=1), st.data())
def test_delete_positions_single(w, data):
    i = data.draw(st.integers(1, w.length))
    out = delete_positions(w, [i])
    assert out.length == w.length - 1
    rebuilt = concat(prefix(w, i - 1), suffix(w, w.length - i))
    assert out == rebuilt


def test_run_count_change_under_single_deletion_exhaustive():
    # deleting an interior bit loses at most two runs, an end bit at most one
    for n in range(1, 13):
        for b in range(1 << n):
            w = Word(n, b)
            r = runs(w).run_count
            for i in range(1, n + 1):
                r2 = runs(delete_positions(w, [i])).run_count
                assert r - 2 <= r2 <= r
                if i in (1, n):
                    assert r2 >= r - 1


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_block_deletion_family_small(ell):
    from math import comb

    from delrecon import is_subsequence

    a, b = seed_pair(ell)
    family = block_deletion_family(ell)
    assert len(family) == comb(2 * ell, ell)
    for member in family:
        assert member.length == b.length - ell
        assert is_subsequence(member, a)
        assert is_subsequence(member, b)
