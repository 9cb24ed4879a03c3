"""Deletion-correcting codebooks and decoders.

The weighted-checksum (VT) code handles the single-deletion case with an
arithmetic O(n) decoder; greedy codebooks cover higher correction radii at
small lengths, decoded by scanning.  Decoders return the codeword or None
for a decode failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import _kernels
from .balls import is_subsequence
from .search import BudgetError
from .words import Word

GREEDY_BUDGET_BITS = 16
VT_ENUMERATION_BUDGET_BITS = 20


class CodebookIntegrityError(RuntimeError):
    """A decode radius within the code's capability matched two codewords."""


@dataclass(frozen=True)
class Codebook:
    """A set of equal-length words with pairwise distance > capability."""

    n: int
    capability: int  # deletions correctable; pairwise distance >= capability + 1
    words: tuple[Word, ...]
    kind: str

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w: Word) -> bool:
        return w in set(self.words)

    def decoder(self) -> Callable[[Word], Word | None]:
        return lambda y: brute_decode(self, y, self.n - y.length)


def vt_syndrome(w: Word) -> int:
    """Position-weighted checksum: sum of i over the 1-bits, mod (length + 1)."""
    total = 0
    for i in range(1, w.length + 1):
        if w.bit(i):
            total += i
    return total % (w.length + 1)


def vt_codebook(n: int, a: int, *, budget_bits: int = VT_ENUMERATION_BUDGET_BITS) -> Codebook:
    """All length-n words with checksum residue a; single-deletion-correcting."""
    if not 0 <= a <= n:
        raise ValueError(f"residue {a} outside [0, {n}]")
    if n > budget_bits:
        raise BudgetError(f"enumerating a length-{n} codebook is over the {budget_bits}-bit budget")
    words = []
    for b in range(1 << n):
        w = Word(n, b)
        if vt_syndrome(w) == a:
            words.append(w)
    return Codebook(n, 1, tuple(words), f"vt(a={a})")


def vt_codeword_by_index(n: int, a: int, index: int) -> Word:
    """The index-th codeword of the residue-a codebook in ascending packed order."""
    book = vt_codebook(n, a)
    if not 0 <= index < len(book.words):
        raise ValueError(f"index {index} outside [0, {len(book.words)})")
    return book.words[index]


def vt_decode(y: Word, n: int, a: int) -> Word | None:
    """Recover the unique residue-a codeword of length n that y was obtained
    from by one deletion.

    Arithmetic reinsertion: the checksum deficiency splits into the deleted
    bit's weight plus the ones to its right, and its value against the weight
    of y decides whether a 0 or a 1 was deleted and where.  Single pass plus
    O(n) arithmetic; returns None if the reconstruction fails verification.
    """
    if y.length != n - 1:
        raise ValueError(f"received length {y.length}, expected {n - 1}")
    if not 0 <= a <= n:
        raise ValueError(f"residue {a} outside [0, {n}]")
    weight = bin(y.bits).count("1")
    # the raw weighted sum, not vt_syndrome(y): that would reduce mod n, not n + 1
    raw = 0
    for i in range(1, y.length + 1):
        if y.bit(i):
            raw += i
    deficiency = (a - raw) % (n + 1)
    if deficiency <= weight:
        # a 0 was deleted with exactly `deficiency` ones to its right
        ones_right = 0
        slot = y.length
        while slot > 0 and ones_right < deficiency:
            slot -= 1
            ones_right += y.bit(slot + 1)
        if ones_right != deficiency:
            return None
        inserted = 0
    else:
        # a 1 was deleted with exactly deficiency - weight - 1 zeros to its left
        zeros_left = deficiency - weight - 1
        seen = 0
        slot = 0
        while slot < y.length and seen < zeros_left:
            seen += 1 - y.bit(slot + 1)
            slot += 1
        if seen != zeros_left:
            return None
        inserted = 1
    hi = y.bits >> (y.length - slot)
    lo = y.bits & ((1 << (y.length - slot)) - 1)
    x = Word(n, (((hi << 1) | inserted) << (y.length - slot)) | lo)
    if vt_syndrome(x) != a or not is_subsequence(y, x):
        return None
    return x


def vt_decoder(n: int, a: int) -> Callable[[Word], Word | None]:
    return lambda y: vt_decode(y, n, a)


def greedy_codebook(n: int, ell: int, *, budget_bits: int = GREEDY_BUDGET_BITS) -> Codebook:
    """Greedily built codebook with pairwise distance >= ell: scan all
    length-n words in ascending packed order, admitting each word that keeps
    the floor against everything admitted before it."""
    if ell < 1:
        raise ValueError(f"distance floor {ell} must be >= 1")
    if n > budget_bits:
        raise BudgetError(f"greedy scan of length-{n} words is over the {budget_bits}-bit budget")
    out = np.empty(1 << n, np.int64)
    count = _kernels._greedy_scan(n, ell, out)
    words = tuple(Word(n, int(b)) for b in out[:count])
    return Codebook(n, ell - 1, words, "greedy")


def brute_decode(cb: Codebook, y: Word, r: int) -> Word | None:
    """Scan the codebook for codewords containing y; the correction guarantee
    makes the match unique whenever r is within the capability."""
    if y.length != cb.n - r:
        raise ValueError(f"received length {y.length}, expected {cb.n - r}")
    matches = [c for c in cb.words if is_subsequence(y, c)]
    if not matches:
        return None
    if len(matches) > 1:
        if r <= cb.capability:
            raise CodebookIntegrityError(
                f"{len(matches)} codewords contain a radius-{r} read; "
                f"the codebook does not meet its distance floor"
            )
        raise ValueError(
            f"radius {r} exceeds the code capability {cb.capability}: ambiguous decode"
        )
    return matches[0]
