"""Deletion balls: brute-force enumeration, DP counting, and intersections.

The enumeration here is deliberately naive (breadth-first single-bit
deletions with set deduplication); it is the oracle every faster route in
the package is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .words import Word, prefix

ENUMERATION_LIMIT = 1_000_000


@dataclass(frozen=True)
class Ball:
    """A radius-t deletion ball: all length-(|center| - t) subsequences."""

    center: Word
    radius: int
    members: frozenset[Word]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class IntersectionRecord:
    """Size of the intersection of two deletion balls of a common member length."""

    x: Word
    y: Word
    t: int
    s: int
    size: int


def _delete_bit(bits: int, m: int, j: int) -> int:
    # drop 0-based position j (from the MSB) of an m-bit word
    hi = bits >> (m - j)
    lo = bits & ((1 << (m - 1 - j)) - 1)
    return (hi << (m - 1 - j)) | lo


def ball_levels(bits: int, n: int, t_max: int) -> list[set[int]]:
    """levels[i] = packed distinct subsequences of length n - i, for i <= t_max."""
    if not 0 <= t_max <= n:
        raise ValueError(f"radius {t_max} outside [0, {n}]")
    levels = [{bits}]
    cur = {bits}
    for depth in range(1, t_max + 1):
        m = n - depth + 1
        nxt = set()
        for w in cur:
            for j in range(m):
                nxt.add(_delete_bit(w, m, j))
        levels.append(nxt)
        cur = nxt
    return levels


def deletion_ball(w: Word, t: int) -> Ball:
    """Enumerate the radius-t deletion ball of w."""
    if not 0 <= t <= w.length:
        raise ValueError(f"radius {t} outside [0, {w.length}]")
    members = ball_levels(w.bits, w.length, t)[t]
    return Ball(w, t, frozenset(Word(w.length - t, b) for b in members))


def ball_size_max(n: int, t: int) -> int:
    """Largest possible radius-t ball size among length-n words.

    Equals sum_{i=0}^{t} C(n - t, i), attained by the alternating word.
    Total by extension: 1 at t = n, and 0 outside 0 <= t <= n.
    """
    if n < 0 or t < 0 or t > n:
        return 0
    return sum(comb(n - t, i) for i in range(t + 1))


def count_ball(w: Word, t: int) -> int:
    """|deletion ball of radius t| without materializing it.

    Layered DP on (prefix length, member length) deduplicating via the
    last-occurrence rule: a distinct subsequence ending in bit a corresponds
    to a distinct shorter subsequence of the prefix before a's last
    occurrence.  O(n * (n - t)) time, exact for any length <= 64.
    """
    n = w.length
    if not 0 <= t <= n:
        raise ValueError(f"radius {t} outside [0, {n}]")
    target = n - t
    last0 = [0] * (n + 1)
    last1 = [0] * (n + 1)
    for i in range(1, n + 1):
        b = w.bit(i)
        last0[i] = i if b == 0 else last0[i - 1]
        last1[i] = i if b == 1 else last1[i - 1]
    prev = [1] * (n + 1)
    for length in range(1, target + 1):
        cur = [0] * (n + 1)
        for i in range(length, n + 1):
            total = 0
            if last0[i]:
                total += prev[last0[i] - 1]
            if last1[i]:
                total += prev[last1[i] - 1]
            cur[i] = total
        prev = cur
    return prev[n]


def is_subsequence(u: Word, w: Word) -> bool:
    """Greedy left-to-right containment test, one pass over w."""
    if u.length > w.length:
        return False
    j = 0
    ub, wb = u.bits, w.bits
    ul, wl = u.length, w.length
    for i in range(wl):
        if j == ul:
            return True
        if ((wb >> (wl - 1 - i)) & 1) == ((ub >> (ul - 1 - j)) & 1):
            j += 1
    return j == ul


def intersection_size(
    x: Word, y: Word, t: int, s: int, *, enumeration_limit: int = ENUMERATION_LIMIT
) -> IntersectionRecord:
    """Exact size of the intersection of the radius-t ball of x and the
    radius-s ball of y.

    Requires |x| <= |y| and a common member length |x| - t = |y| - s >= 0.
    Enumerates the ball with the smaller count; the other side is either
    enumerated too and set-intersected, or probed member-by-member with the
    greedy containment test when its enumeration would exceed
    ``enumeration_limit``.
    """
    if x.length > y.length:
        raise ValueError(f"|x| = {x.length} exceeds |y| = {y.length}; swap the arguments")
    if not 0 <= t <= x.length or not 0 <= s <= y.length:
        raise ValueError(f"radii ({t}, {s}) out of range for lengths ({x.length}, {y.length})")
    if x.length - t != y.length - s:
        raise ValueError(
            f"member lengths differ: {x.length} - {t} != {y.length} - {s}"
        )
    cx = count_ball(x, t)
    cy = count_ball(y, s)
    if cx <= cy:
        small, small_r, big, big_r, big_count = x, t, y, s, cy
    else:
        small, small_r, big, big_r, big_count = y, s, x, t, cx
    small_members = ball_levels(small.bits, small.length, small_r)[small_r]
    if big_count <= enumeration_limit:
        big_members = ball_levels(big.bits, big.length, big_r)[big_r]
        size = len(small_members & big_members)
    else:
        member_len = small.length - small_r
        size = sum(
            1 for b in small_members if is_subsequence(Word(member_len, b), big)
        )
    return IntersectionRecord(x, y, t, s, size)


def ball_restrict_last(w: Word, t: int, a: int) -> frozenset[Word]:
    """Members of the radius-t ball of w that end in bit a.

    Computed by the prefix rule rather than by filtering: with i the last
    position of w carrying a, these are exactly the radius-(t - (n - i))
    ball members of the length-(i - 1) prefix, each extended by a.
    """
    n = w.length
    if not 0 <= t <= n:
        raise ValueError(f"radius {t} outside [0, {n}]")
    if a not in (0, 1):
        raise ValueError(f"bit must be 0 or 1, got {a}")
    if t == n:
        return frozenset()
    last = 0
    for i in range(n, 0, -1):
        if w.bit(i) == a:
            last = i
            break
    if last == 0:
        return frozenset()
    r = t - (n - last)
    if r < 0 or r > last - 1:
        return frozenset()
    stems = ball_levels(prefix(w, last - 1).bits, last - 1, r)[r]
    return frozenset(Word(n - t, (b << 1) | a) for b in stems)
