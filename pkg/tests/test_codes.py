import pytest

from delrecon import (
    BudgetError,
    Codebook,
    CodebookIntegrityError,
    Word,
    brute_decode,
    deletion_ball,
    deletion_distance,
    greedy_codebook,
    is_subsequence,
    parse_word,
    vt_codebook,
    vt_codeword_by_index,
    vt_decode,
    vt_syndrome,
)


def test_vt_syndrome_examples():
    assert vt_syndrome(parse_word("0000")) == 0
    assert vt_syndrome(parse_word("1000")) == 1
    assert vt_syndrome(parse_word("1010")) == 4
    assert vt_syndrome(parse_word("")) == 0


def test_vt_codebook_contains_expected_words():
    book = vt_codebook(4, 0)
    assert parse_word("0000") in book
    assert all(vt_syndrome(w) == 0 for w in book.words)
    assert book.capability == 1


def test_vt_codebook_residue_range():
    with pytest.raises(ValueError):
        vt_codebook(4, 5)
    with pytest.raises(BudgetError):
        vt_codebook(24, 0)


def test_vt_codebook_pairwise_distance():
    words = vt_codebook(7, 0).words
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            assert deletion_distance(words[i], words[j]).value >= 2


def test_vt_codebook_size_matches_direct_count():
    expected = sum(1 for b in range(1 << 8) if vt_syndrome(Word(8, b)) == 0)
    assert len(vt_codebook(8, 0)) == expected


def test_vt_classes_partition_all_words():
    total = sum(len(vt_codebook(6, a)) for a in range(7))
    assert total == 64


def test_vt_decode_round_trip_exhaustive():
    # every word of every length <= 10 against every single deletion
    for n in range(2, 11):
        for b in range(1 << n):
            x = Word(n, b)
            a = vt_syndrome(x)
            for y in deletion_ball(x, 1).members:
                assert vt_decode(y, n, a) == x


def test_vt_decode_covers_every_input():
    # the radius-1 balls of each residue class tile the shorter words: decode
    # always lands on a codeword containing the input, so a FAILURE outcome
    # cannot be produced by any well-formed (input, residue) combination
    for n in (4, 6, 7):
        for a in range(n + 1):
            for yb in range(1 << (n - 1)):
                y = Word(n - 1, yb)
                x = vt_decode(y, n, a)
                assert x is not None
                assert vt_syndrome(x) == a
                assert is_subsequence(y, x)


def test_vt_decode_length_check():
    with pytest.raises(ValueError):
        vt_decode(parse_word("101"), 5, 0)


def test_vt_encode_by_index():
    book = vt_codebook(6, 2)
    for i, w in enumerate(book.words):
        assert vt_codeword_by_index(6, 2, i) == w
    with pytest.raises(ValueError):
        vt_codeword_by_index(6, 2, len(book.words))


def test_greedy_floor_one_admits_everything():
    assert len(greedy_codebook(4, 1)) == 16


def test_greedy_codebook_pairwise_distances():
    for n, ell in [(4, 2), (8, 2), (10, 3)]:
        book = greedy_codebook(n, ell)
        assert book.capability == ell - 1
        assert len(book.words) >= 2
        words = book.words
        for i in range(len(words)):
            for j in range(i + 1, len(words)):
                assert deletion_distance(words[i], words[j]).value >= ell


def test_greedy_budget_guard():
    with pytest.raises(BudgetError):
        greedy_codebook(17, 2)
    with pytest.raises(ValueError):
        greedy_codebook(6, 0)


def test_brute_decode_round_trip():
    book = greedy_codebook(8, 3)
    for x in book.words:
        for r in range(book.capability + 1):
            for y in deletion_ball(x, r).members:
                assert brute_decode(book, y, r) == x


def test_brute_decode_failure_outside_all_balls():
    lonely = Codebook(6, 2, (parse_word("000000"),), "explicit")
    assert brute_decode(lonely, parse_word("1111"), 2) is None


def test_brute_decode_never_returns_noncontaining_codeword():
    book = greedy_codebook(7, 2)
    for yb in range(1 << 6):
        y = Word(6, yb)
        got = brute_decode(book, y, 1)
        if got is not None:
            assert is_subsequence(y, got)


def test_brute_decode_integrity_error_on_corrupt_codebook():
    # distance 1 < capability + 1: the advertised floor is a lie
    corrupt = Codebook(4, 1, (parse_word("0000"), parse_word("0001")), "explicit")
    with pytest.raises(CodebookIntegrityError):
        brute_decode(corrupt, parse_word("000"), 1)


def test_brute_decode_ambiguous_beyond_capability():
    book = Codebook(6, 1, (parse_word("000000"), parse_word("000011")), "explicit")
    with pytest.raises(ValueError):
        brute_decode(book, parse_word("0000"), 2)


def test_brute_decode_length_check():
    book = greedy_codebook(6, 2)
    with pytest.raises(ValueError):
        brute_decode(book, parse_word("0101"), 1)
