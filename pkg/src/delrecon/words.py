"""Packed binary words, run statistics, and the extremal pair constructions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

CAPACITY = 64


class CapacityError(ValueError):
    """Requested word would not fit in the 64-bit packing."""


@dataclass(frozen=True, order=True)
class Word:
    """Immutable binary word of length <= 64, packed MSB-first.

    Bit i (1-based, leftmost bit is i = 1) lives at shift ``length - i``, so
    "10" packs to 0b10 and equal-length words compare in lexicographic order.
    Words of different lengths are never equal; the empty word is Word(0, 0).
    """

    length: int
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.length <= CAPACITY:
            raise CapacityError(f"length {self.length} outside [0, {CAPACITY}]")
        if not 0 <= self.bits < (1 << self.length):
            raise ValueError(f"packed value 0b{self.bits:b} does not fit length {self.length}")

    def bit(self, i: int) -> int:
        """Bit value at 1-based position i."""
        if not 1 <= i <= self.length:
            raise IndexError(f"position {i} outside [1, {self.length}]")
        return (self.bits >> (self.length - i)) & 1

    def text(self) -> str:
        return format(self.bits, "b").zfill(self.length) if self.length else ""

    def __str__(self) -> str:
        return self.text()

    def __len__(self) -> int:
        return self.length


EMPTY = Word(0, 0)


@dataclass(frozen=True)
class RunProfile:
    """Maximal blocks of equal bits: how many, and how long each is."""

    run_count: int
    run_lengths: tuple[int, ...]


def parse_word(text: str) -> Word:
    """Parse a '0'/'1' string, leftmost character first."""
    if text.strip("01"):
        bad = text.strip("01")[0]
        raise ValueError(f"invalid character {bad!r} in word {text!r}")
    return Word(len(text), int(text, 2) if text else 0)


def runs(w: Word) -> RunProfile:
    """Run statistics of w; the empty word has zero runs."""
    if w.length == 0:
        return RunProfile(0, ())
    lengths = []
    cur_bit = w.bit(1)
    cur_len = 1
    for i in range(2, w.length + 1):
        b = w.bit(i)
        if b == cur_bit:
            cur_len += 1
        else:
            lengths.append(cur_len)
            cur_bit = b
            cur_len = 1
    lengths.append(cur_len)
    return RunProfile(len(lengths), tuple(lengths))


def alternating(m: int, first: int = 1) -> Word:
    """Alternating word of length m whose bit i is first ^ ((i - 1) % 2)."""
    if m < 0:
        raise ValueError(f"negative length {m}")
    if first not in (0, 1):
        raise ValueError(f"first bit must be 0 or 1, got {first}")
    bits = 0
    for i in range(m):
        bits = (bits << 1) | (first ^ (i & 1))
    return Word(m, bits)


def prefix(w: Word, i: int) -> Word:
    """The first i bits of w."""
    if not 0 <= i <= w.length:
        raise IndexError(f"prefix length {i} outside [0, {w.length}]")
    return Word(i, w.bits >> (w.length - i))


def suffix(w: Word, i: int) -> Word:
    """The last i bits of w."""
    if not 0 <= i <= w.length:
        raise IndexError(f"suffix length {i} outside [0, {w.length}]")
    return Word(i, w.bits & ((1 << i) - 1))


def concat(u: Word, v: Word) -> Word:
    return Word(u.length + v.length, (u.bits << v.length) | v.bits)


def complement(w: Word) -> Word:
    return Word(w.length, w.bits ^ ((1 << w.length) - 1))


def reverse(w: Word) -> Word:
    r = 0
    b = w.bits
    for _ in range(w.length):
        r = (r << 1) | (b & 1)
        b >>= 1
    return Word(w.length, r)


def delete_positions(w: Word, positions: Iterable[int]) -> Word:
    """Delete the given 1-based positions from w."""
    drop = set(positions)
    for p in drop:
        if not 1 <= p <= w.length:
            raise IndexError(f"position {p} outside [1, {w.length}]")
    bits = 0
    kept = 0
    for i in range(1, w.length + 1):
        if i not in drop:
            bits = (bits << 1) | w.bit(i)
            kept += 1
    return Word(kept, bits)


def seed_pair(ell: int) -> tuple[Word, Word]:
    """The canonical length-(4*ell - 2) pair at deletion distance ell.

    The first word is fully alternating ("1010" repeated, ending "10"); the
    second replaces every other two-bit block by "01".  Their radius-ell
    deletion balls share at least C(2*ell, ell) words, which makes the pair
    the seed of the padded extremal construction.
    """
    if ell < 1:
        raise ValueError(f"ell must be positive, got {ell}")
    a = parse_word("1010" * (ell - 1) + "10")
    b = parse_word("0110" * (ell - 1) + "01")
    return a, b


def extremal_pair(n: int, ell: int) -> tuple[Word, Word]:
    """The seed pair padded with a shared alternating tail to length n."""
    a, b = seed_pair(ell)
    if n < a.length:
        raise ValueError(f"n = {n} shorter than the seed length {a.length}")
    z = alternating(n - a.length, first=1)
    return concat(a, z), concat(b, z)


def block_deletion_family(ell: int) -> frozenset[Word]:
    """Subsequences of the second seed word with ell bits deleted from the
    positions where the two seed words disagree.

    The disagreement positions are exactly those congruent to 1 or 2 mod 4.
    The family has C(2*ell, ell) distinct members, each a radius-ell ball
    member of both seed words.
    """
    _, b = seed_pair(ell)
    disagree = [i for i in range(1, b.length + 1) if i % 4 in (1, 2)]
    return frozenset(delete_positions(b, sel) for sel in combinations(disagree, ell))
