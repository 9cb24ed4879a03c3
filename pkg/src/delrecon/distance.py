"""Deletion Levenshtein distance via LCS, with witness recovery and the
prefix recursion checks."""

from __future__ import annotations

from dataclasses import dataclass

from .words import Word


@dataclass(frozen=True)
class DistanceResult:
    """Distance value plus one witness common subsequence of maximal length."""

    value: int
    witness: Word


def _bit_list(w: Word) -> list[int]:
    bits, n = w.bits, w.length
    return [(bits >> (n - i)) & 1 for i in range(1, n + 1)]


def lcs_length(x: Word, y: Word) -> int:
    """Length of the longest common subsequence, row-based DP."""
    xs, ys = _bit_list(x), _bit_list(y)
    m = len(ys)
    row = [0] * (m + 1)
    for xi in xs:
        diag = 0
        for j in range(1, m + 1):
            tmp = row[j]
            if xi == ys[j - 1]:
                row[j] = diag + 1
            elif row[j - 1] > row[j]:
                row[j] = row[j - 1]
            diag = tmp
    return row[m]


def _suffix_lcs_table(x: Word, y: Word) -> list[list[int]]:
    n, m = x.length, y.length
    table = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n - 1, -1, -1):
        xi = x.bit(i + 1)
        for j in range(m - 1, -1, -1):
            if xi == y.bit(j + 1):
                table[i][j] = table[i + 1][j + 1] + 1
            else:
                table[i][j] = max(table[i + 1][j], table[i][j + 1])
    return table


def deletion_distance(x: Word, y: Word) -> DistanceResult:
    """Least t such that x and y share a subsequence reachable by t deletions
    from the shorter word (and t + |len gap| from the longer).

    Equals |shorter| - LCS.  The witness is recovered by a forward walk over
    the suffix LCS table, matching the shorter word's bits as early as
    possible, so it is deterministic.
    """
    if x.length > y.length:
        x, y = y, x
    table = _suffix_lcs_table(x, y)
    value = x.length - table[0][0]
    bits = 0
    length = 0
    i = j = 0
    while table[i][j] > 0:
        if x.bit(i + 1) == y.bit(j + 1) and table[i + 1][j + 1] == table[i][j] - 1:
            bits = (bits << 1) | x.bit(i + 1)
            length += 1
            i += 1
            j += 1
        elif table[i][j + 1] == table[i][j]:
            j += 1
        else:
            i += 1
    return DistanceResult(value, Word(length, bits))


def _distance_value(x: Word, y: Word) -> int:
    # distance without witness recovery; cheap enough for exhaustive sweeps
    if x.length > y.length:
        x, y = y, x
    return x.length - lcs_length(x, y)


def check_distance_recursion(x: Word, y: Word, ell: int) -> bool:
    """Verify the applicable prefix-distance rule for a pair at distance >= ell.

    With n = |x| and |y| = n + k:
      - equal last bits: dropping both last bits keeps distance >= ell;
      - differing last bits, k = 0: both one-sided prefix distances >= ell - 1;
      - differing last bits, k > 0: dropping x's last bit gives >= ell - 1 and
        dropping y's last bit gives >= ell.
    """
    if y.length < x.length:
        raise ValueError(f"|y| = {y.length} must be at least |x| = {x.length}")
    if x.length == 0:
        raise ValueError("x must be nonempty")
    n, m = x.length, y.length
    k = m - n
    # one forward LCS table covers the pair and all three prefix pairs
    xs, ys = _bit_list(x), _bit_list(y)
    table = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        xi = xs[i - 1]
        prev_row = table[i - 1]
        row = table[i]
        for j in range(1, m + 1):
            if xi == ys[j - 1]:
                row[j] = prev_row[j - 1] + 1
            else:
                a = prev_row[j]
                b = row[j - 1]
                row[j] = a if a >= b else b
    if n - table[n][m] < ell:
        raise ValueError(f"pair distance below the required floor {ell}")
    if xs[-1] == ys[-1]:
        return (n - 1) - table[n - 1][m - 1] >= ell
    d_drop_x = (n - 1) - table[n - 1][m]
    d_drop_y = (min(n, m - 1)) - table[n][m - 1]
    if k == 0:
        return d_drop_x >= ell - 1 and d_drop_y >= ell - 1
    return d_drop_x >= ell - 1 and d_drop_y >= ell
