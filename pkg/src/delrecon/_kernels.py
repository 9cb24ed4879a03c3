"""Numba kernels behind the exhaustive pair scans.

Words are packed MSB-first into int64 (the scans stay well below 62 bits;
the pure-Python paths own the full 64-bit range).  Every kernel is
deterministic and releases the GIL, so scan chunks can run on a thread pool
and still merge to the same result.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _lcs(xb, n, yb, m, rows):
    # rows: int64[2, m+1] scratch
    for j in range(m + 1):
        rows[0, j] = 0
    cur = 1
    for i in range(1, n + 1):
        xi = (xb >> (n - i)) & 1
        prv = 1 - cur
        rows[cur, 0] = 0
        for j in range(1, m + 1):
            if xi == ((yb >> (m - j)) & 1):
                rows[cur, j] = rows[prv, j - 1] + 1
            else:
                a = rows[prv, j]
                b = rows[cur, j - 1]
                rows[cur, j] = a if a >= b else b
        cur = prv
    return rows[1 - cur, m]


@njit(cache=True, nogil=True)
def _fill_last(bits, n, l0, l1):
    # l0[i]/l1[i]: largest position <= i carrying bit 0/1 (0 if none)
    l0[0] = 0
    l1[0] = 0
    for i in range(1, n + 1):
        if (bits >> (n - i)) & 1:
            l1[i] = i
            l0[i] = l0[i - 1]
        else:
            l0[i] = i
            l1[i] = l1[i - 1]


@njit(cache=True, nogil=True)
def _common_counts(n, m, lmax, lx0, lx1, ly0, ly1, prev, cur, counts):
    # counts[l] = distinct common subsequences of length l, for l = 0..lmax.
    # Last-occurrence tables must be filled for both words already.
    for i in range(n + 1):
        for j in range(m + 1):
            prev[i, j] = 1
    counts[0] = 1
    for l in range(1, lmax + 1):
        for i in range(n + 1):
            i0 = lx0[i]
            i1 = lx1[i]
            for j in range(m + 1):
                total = 0
                if i0 > 0 and ly0[j] > 0:
                    total += prev[i0 - 1, ly0[j] - 1]
                if i1 > 0 and ly1[j] > 0:
                    total += prev[i1 - 1, ly1[j] - 1]
                cur[i, j] = total
        counts[l] = cur[n, m]
        tmp = prev
        prev = cur
        cur = tmp


@njit(cache=True, nogil=True)
def _is_subseq(ub, lu, wb, lw):
    if lu > lw:
        return False
    j = 0
    for i in range(lw):
        if j == lu:
            return True
        if ((wb >> (lw - 1 - i)) & 1) == ((ub >> (lu - 1 - j)) & 1):
            j += 1
    return j == lu


@njit(cache=True, nogil=True)
def _reverse_table(n):
    out = np.empty(1 << n, np.int64)
    for v in range(1 << n):
        r = 0
        for i in range(n):
            r = (r << 1) | ((v >> i) & 1)
        out[v] = r
    return out


@njit(cache=True, nogil=True)
def _not_canonical(x, y, k, mask_x, mask_y, rev_x, rev_y):
    # Canonical pair = lexicographic minimum over the diagonal action of
    # {identity, complement, reverse, reverse-complement}, with unordered
    # normalization when the lengths agree (k == 0).
    vx = x ^ mask_x
    vy = y ^ mask_y
    if k == 0 and vx > vy:
        vx, vy = vy, vx
    if vx < x or (vx == x and vy < y):
        return True
    vx = rev_x[x]
    vy = rev_y[y]
    if k == 0 and vx > vy:
        vx, vy = vy, vx
    if vx < x or (vx == x and vy < y):
        return True
    vx = rev_x[x] ^ mask_x
    vy = rev_y[y] ^ mask_y
    if k == 0 and vx > vy:
        vx, vy = vy, vx
    if vx < x or (vx == x and vy < y):
        return True
    return False


@njit(cache=True, nogil=True)
def _scan_bucket(n, k, t, x_lo, x_hi, use_sym, rev_x, rev_y, best, arg_x, arg_y):
    """Bucketed maxima over the pair space: best[d] = max over pairs at exact
    distance d of the intersection size at radii (t, t + k).

    For k == 0 the scan is over unordered pairs (y >= x), diagonal included;
    for k > 0 it is over all ordered pairs with the shorter word first.
    First-found argmax within the ascending scan order is recorded, which is
    the lexicographically smallest one.
    """
    m = n + k
    size_y = 1 << m
    mask_x = (1 << n) - 1
    mask_y = (1 << m) - 1
    target = n - t
    rows = np.empty((2, m + 1), np.int64)
    lx0 = np.empty(n + 1, np.int64)
    lx1 = np.empty(n + 1, np.int64)
    ly0 = np.empty(m + 1, np.int64)
    ly1 = np.empty(m + 1, np.int64)
    prev = np.empty((n + 1, m + 1), np.int64)
    cur = np.empty((n + 1, m + 1), np.int64)
    counts = np.empty(n + 1, np.int64)
    for x in range(x_lo, x_hi):
        _fill_last(x, n, lx0, lx1)
        y_start = x if k == 0 else 0
        for y in range(y_start, size_y):
            if use_sym and _not_canonical(x, y, k, mask_x, mask_y, rev_x, rev_y):
                continue
            lcs = _lcs(x, n, y, m, rows)
            d = n - lcs
            if d > t:
                delta = 0
            else:
                _fill_last(y, m, ly0, ly1)
                _common_counts(n, m, target, lx0, lx1, ly0, ly1, prev, cur, counts)
                delta = counts[target]
            if delta > best[d]:
                best[d] = delta
                arg_x[d] = x
                arg_y[d] = y


@njit(cache=True, nogil=True)
def _scan_table(n, k, x_lo, x_hi, use_sym, rev_x, rev_y, best, arg_x, arg_y):
    """Full-radius variant: best[d, t] over pairs at exact distance d, for
    every radius t in 0..n at once.

    Also cross-checks per pair that the count profile is positive exactly up
    to the DP LCS (the ball-intersection definition of the distance); the
    return value is the number of pairs violating that, expected 0.
    """
    m = n + k
    size_y = 1 << m
    mask_x = (1 << n) - 1
    mask_y = (1 << m) - 1
    rows = np.empty((2, m + 1), np.int64)
    lx0 = np.empty(n + 1, np.int64)
    lx1 = np.empty(n + 1, np.int64)
    ly0 = np.empty(m + 1, np.int64)
    ly1 = np.empty(m + 1, np.int64)
    prev = np.empty((n + 1, m + 1), np.int64)
    cur = np.empty((n + 1, m + 1), np.int64)
    counts = np.empty(n + 1, np.int64)
    violations = 0
    for x in range(x_lo, x_hi):
        _fill_last(x, n, lx0, lx1)
        y_start = x if k == 0 else 0
        for y in range(y_start, size_y):
            if use_sym and _not_canonical(x, y, k, mask_x, mask_y, rev_x, rev_y):
                continue
            lcs = _lcs(x, n, y, m, rows)
            _fill_last(y, m, ly0, ly1)
            _common_counts(n, m, n, lx0, lx1, ly0, ly1, prev, cur, counts)
            for l in range(n + 1):
                if (counts[l] > 0) != (l <= lcs):
                    violations += 1
                    break
            d = n - lcs
            for t in range(n + 1):
                delta = counts[n - t]
                if delta > best[d, t]:
                    best[d, t] = delta
                    arg_x[d, t] = x
                    arg_y[d, t] = y
    return violations


@njit(cache=True, nogil=True)
def _delta_single(xb, n, yb, m, target):
    # distinct common subsequences of exactly the target length
    if target < 0 or target > n or target > m:
        return 0
    lx0 = np.empty(n + 1, np.int64)
    lx1 = np.empty(n + 1, np.int64)
    ly0 = np.empty(m + 1, np.int64)
    ly1 = np.empty(m + 1, np.int64)
    prev = np.empty((n + 1, m + 1), np.int64)
    cur = np.empty((n + 1, m + 1), np.int64)
    counts = np.empty(max(target, 1) + 1, np.int64)
    _fill_last(xb, n, lx0, lx1)
    _fill_last(yb, m, ly0, ly1)
    _common_counts(n, m, target, lx0, lx1, ly0, ly1, prev, cur, counts)
    return counts[target]


@njit(cache=True, nogil=True)
def _lcs_single(xb, n, yb, m):
    rows = np.empty((2, m + 1), np.int64)
    return _lcs(xb, n, yb, m, rows)


@njit(cache=True, nogil=True)
def _candidate_pair_check(y1, y2, m, xb, n):
    # Build both single-insertion candidates from two distinct equal-length
    # reads and test whether at least one is a subsequence of x.
    diff = y1 ^ y2
    u_len = 0
    while not (diff >> u_len) & 1:
        u_len += 1
    if (y1 >> u_len) & 1:
        ya, yb_ = y2, y1
    else:
        ya, yb_ = y1, y2
    u = ya & ((1 << u_len) - 1)
    head_a = ya >> (u_len + 1)
    head_b = yb_ >> (u_len + 1)
    c1 = (head_a << (u_len + 2)) | (1 << u_len) | u
    c2 = (head_b << (u_len + 2)) | (2 << u_len) | u
    return _is_subseq(c1, m + 1, xb, n) or _is_subseq(c2, m + 1, xb, n)


@njit(cache=True, nogil=True)
def _two_read_candidates_scan(xb, n, t, ball):
    """Count the read pairs from a radius-t ball whose candidate pair misses
    the center at radius t - 1 (expected 0)."""
    m = n - t
    violations = 0
    for i in range(len(ball)):
        for j in range(i + 1, len(ball)):
            if not _candidate_pair_check(ball[i], ball[j], m, xb, n):
                violations += 1
    return violations


@njit(cache=True, nogil=True)
def _greedy_scan(n, min_dist, out):
    """Greedy codebook: admit words in ascending packed order whose distance
    to every admitted word is at least min_dist.  Returns the admitted count;
    admitted words are written to out."""
    rows = np.empty((2, n + 1), np.int64)
    count = 0
    for w in range(1 << n):
        ok = True
        for idx in range(count):
            if n - _lcs(w, n, out[idx], n, rows) < min_dist:
                ok = False
                break
        if ok:
            out[count] = w
            count += 1
    return count
