"""Exhaustive maximum ball-intersection over distance-separated pairs, the
closed-form values for distance floors 1 and 2, bound verification, and the
recurrence comparison report.

Scans bucket the maximum intersection size by exact pair distance, so a
single (n, t) sweep answers every distance floor at once; results are cached
per process.  The scan kernels live in ``_kernels``; the pure-Python twin
``common_subsequence_count`` is kept alongside for cross-checking and for
words too long to pack into the kernels' int64 lane.
"""

from __future__ import annotations

import csv
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from pathlib import Path
from typing import Callable

import numpy as np

from . import _kernels
from .balls import ball_size_max
from .words import Word, parse_word

MAX_SCAN_BITS = 14
MAX_PAIR_EVALS = 1 << 30
_KERNEL_BIT_LIMIT = 62


class BudgetError(ValueError):
    """The requested scan exceeds the configured desk-scale budget."""


class InfeasibleQueryError(ValueError):
    """No pair satisfies the requested distance floor."""


@dataclass(frozen=True)
class NQuery:
    """Parameters of one maximum-intersection query."""

    n: int
    ell: int
    t: int
    k: int = 0

    def __post_init__(self) -> None:
        if self.ell < 0:
            raise ValueError(f"distance floor {self.ell} must be >= 0")
        if not 0 <= self.t < self.n:
            raise ValueError(f"radius t = {self.t} outside [0, n) for n = {self.n}")
        if self.k < 0:
            raise ValueError(f"length gap {self.k} must be >= 0")


@dataclass(frozen=True)
class NEntry:
    n: int
    ell: int
    t: int
    value: int
    method: str  # "exhaustive" | "formula"
    k: int = 0
    argmax: tuple[Word, Word] | None = None


@dataclass(frozen=True)
class BucketTable:
    """Per-distance maxima of the intersection size at one radius pair.

    best[d] is the maximum over pairs at exact distance d (-1 when the scan
    saw no pair with that distance); arg_x/arg_y hold the lexicographically
    smallest attaining pair, packed.
    """

    n: int
    t: int
    k: int
    best: tuple[int, ...]
    arg_x: tuple[int, ...]
    arg_y: tuple[int, ...]


@dataclass(frozen=True)
class OverlapTable:
    """Per-(distance, radius) maxima from one full sweep of a pair space,
    plus the count of pairs whose count profile contradicted the LCS-based
    distance (expected 0 always)."""

    n: int
    k: int
    best: tuple[tuple[int, ...], ...]
    arg_x: tuple[tuple[int, ...], ...]
    arg_y: tuple[tuple[int, ...], ...]
    definition_violations: int


_BUCKET_CACHE: dict[tuple[int, int, int], BucketTable] = {}
_OVERLAP_CACHE: dict[tuple[int, int], OverlapTable] = {}
_REV_TABLES: dict[int, np.ndarray] = {}


def clear_caches() -> None:
    _BUCKET_CACHE.clear()
    _OVERLAP_CACHE.clear()


def _rev_table(n: int) -> np.ndarray:
    tab = _REV_TABLES.get(n)
    if tab is None:
        tab = _kernels._reverse_table(n)
        _REV_TABLES[n] = tab
    return tab


def _pair_evals(n: int, k: int) -> int:
    s = 1 << n
    return s * (s + 1) // 2 if k == 0 else s * (1 << (n + k))


def _check_scan_budget(n: int, k: int) -> None:
    if n < 1:
        raise ValueError(f"scan needs n >= 1, got {n}")
    if n + k > 20:
        raise BudgetError(f"scan over {n}+{k} bit words is beyond the supported range")
    if _pair_evals(n, k) > MAX_PAIR_EVALS:
        raise BudgetError(
            f"scan would evaluate {_pair_evals(n, k)} pairs, over the {MAX_PAIR_EVALS} cap"
        )


def _chunk_ranges(n: int, jobs: int) -> list[tuple[int, int]]:
    size = 1 << n
    chunks = 1 if jobs <= 1 else min(size, jobs * 4)
    bounds = [size * i // chunks for i in range(chunks + 1)]
    return [(bounds[i], bounds[i + 1]) for i in range(chunks) if bounds[i] < bounds[i + 1]]


def _run_chunks(worker: Callable, ranges: list[tuple[int, int]], jobs: int) -> list:
    if jobs <= 1 or len(ranges) == 1:
        return [worker(lo, hi) for lo, hi in ranges]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(worker, lo, hi) for lo, hi in ranges]
        return [f.result() for f in futures]


def bucket_scan(
    n: int, t: int, k: int = 0, *, symmetry: bool = True, jobs: int = 1, use_cache: bool = True
) -> BucketTable:
    """Sweep all pairs (x of length n, y of length n + k) and record, per
    exact distance d, the maximum intersection size at radii (t, t + k).

    With ``symmetry`` the sweep skips pairs that are not the canonical
    representative under complement/reversal; values and argmax pairs are
    unchanged by the reduction.  Deterministic for any ``jobs``: chunks are
    merged in ascending order of the first word.
    """
    if not 0 <= t <= n:
        raise ValueError(f"radius {t} outside [0, {n}]")
    key = (n, t, k)
    if use_cache and key in _BUCKET_CACHE:
        return _BUCKET_CACHE[key]
    _check_scan_budget(n, k)
    rev_x = _rev_table(n)
    rev_y = _rev_table(n + k)

    def worker(lo: int, hi: int):
        best = np.full(n + 1, -1, np.int64)
        ax = np.zeros(n + 1, np.int64)
        ay = np.zeros(n + 1, np.int64)
        _kernels._scan_bucket(n, k, t, lo, hi, symmetry, rev_x, rev_y, best, ax, ay)
        return best, ax, ay

    best = [-1] * (n + 1)
    arg_x = [0] * (n + 1)
    arg_y = [0] * (n + 1)
    for cb, cx, cy in _run_chunks(worker, _chunk_ranges(n, jobs), jobs):
        for d in range(n + 1):
            if cb[d] > best[d]:
                best[d] = int(cb[d])
                arg_x[d] = int(cx[d])
                arg_y[d] = int(cy[d])
    table = BucketTable(n, t, k, tuple(best), tuple(arg_x), tuple(arg_y))
    if use_cache:
        _BUCKET_CACHE[key] = table
    return table


def overlap_table_scan(n: int, k: int = 0, *, jobs: int = 1, use_cache: bool = True) -> OverlapTable:
    """Sweep every pair once (no symmetry reduction) and record the maximum
    intersection size for every (exact distance, radius) cell."""
    key = (n, k)
    if use_cache and key in _OVERLAP_CACHE:
        return _OVERLAP_CACHE[key]
    _check_scan_budget(n, k)
    rev_x = _rev_table(n)
    rev_y = _rev_table(n + k)

    def worker(lo: int, hi: int):
        best = np.full((n + 1, n + 1), -1, np.int64)
        ax = np.zeros((n + 1, n + 1), np.int64)
        ay = np.zeros((n + 1, n + 1), np.int64)
        viol = _kernels._scan_table(n, k, lo, hi, False, rev_x, rev_y, best, ax, ay)
        return best, ax, ay, viol

    best = np.full((n + 1, n + 1), -1, np.int64)
    arg_x = np.zeros((n + 1, n + 1), np.int64)
    arg_y = np.zeros((n + 1, n + 1), np.int64)
    violations = 0
    for cb, cx, cy, cv in _run_chunks(worker, _chunk_ranges(n, jobs), jobs):
        violations += int(cv)
        upd = cb > best
        best[upd] = cb[upd]
        arg_x[upd] = cx[upd]
        arg_y[upd] = cy[upd]
    table = OverlapTable(
        n,
        k,
        tuple(tuple(int(v) for v in row) for row in best),
        tuple(tuple(int(v) for v in row) for row in arg_x),
        tuple(tuple(int(v) for v in row) for row in arg_y),
        violations,
    )
    if use_cache:
        _OVERLAP_CACHE[key] = table
    return table


def compute_n_exhaustive(
    q: NQuery, *, jobs: int = 1, symmetry: bool = True, budget_bits: int = MAX_SCAN_BITS
) -> NEntry:
    """Exact maximum intersection size over pairs at distance >= q.ell,
    by exhaustive sweep.

    The headline quantity fixes k = 0 (both words of length n) and then
    includes x = y when ell = 0, so the ell = 0 value is the maximum ball
    size.  k > 0 sweeps x against all longer words to exercise the general
    bound.
    """
    n, ell, t, k = q.n, q.ell, q.t, q.k
    if ell > t:
        raise ValueError(f"distance floor {ell} above radius {t}; the maximum is 0 there by definition")
    if n > budget_bits:
        raise BudgetError(f"n = {n} over the scan budget of {budget_bits} bits")
    table = bucket_scan(n, t, k, symmetry=symmetry, jobs=jobs)
    value = None
    arg = None
    for d in range(ell, n + 1):
        b = table.best[d]
        if b < 0:
            continue
        pair = (table.arg_x[d], table.arg_y[d])
        if value is None or b > value or (b == value and pair < arg):
            value, arg = b, pair
    if value is None:
        raise InfeasibleQueryError(f"no pair of length-{n} words has distance >= {ell}")
    return NEntry(
        n, ell, t, value, "exhaustive", k=k, argmax=(Word(n, arg[0]), Word(n + k, arg[1]))
    )


def n_formula_dist1(n: int, t: int) -> int:
    """Closed form for the distance floor 1: twice the maximum ball size of
    length n - 2 at radius t - 1."""
    if not 1 <= t < n:
        raise ValueError(f"need 1 <= t < n, got t = {t}, n = {n}")
    return 2 * ball_size_max(n - 2, t - 1)


def n_formula_dist2(n: int, t: int) -> int:
    """Five-term closed form for the distance floor 2 (valid for n >= 8),
    evaluated with the total extension of the maximum ball size (0 at
    negative radius)."""
    if not 2 <= t < n:
        raise ValueError(f"need 2 <= t < n, got t = {t}, n = {n}")
    if n < 8:
        raise ValueError(f"the closed form needs n >= 8, got {n}")
    return (
        2 * ball_size_max(n - 4, t - 2)
        + 2 * ball_size_max(n - 5, t - 2)
        + 2 * ball_size_max(n - 7, t - 2)
        + ball_size_max(n - 6, t - 3)
        + ball_size_max(n - 7, t - 3)
    )


def overlap_upper_bound(n: int, ell: int, t: int, k: int = 0) -> Fraction:
    """Exact rational value of the intersection bound for pairs at distance
    >= ell: C(k + 2*ell, ell) / (t - ell)! * n^(t - ell); zero when t < ell."""
    if ell < 0 or t < 0 or k < 0 or n < 0:
        raise ValueError("arguments must be nonnegative")
    if t < ell:
        return Fraction(0)
    return Fraction(comb(k + 2 * ell, ell) * n ** (t - ell), factorial(t - ell))


def overlap_lower_bound(n: int, ell: int, t: int) -> int:
    """Guaranteed intersection size of the padded extremal pair:
    C(2*ell, ell) times the maximum ball size of the shared tail."""
    if ell < 1:
        raise ValueError(f"the extremal construction needs ell >= 1, got {ell}")
    if n < 4 * ell - 2:
        raise ValueError(f"n = {n} below the seed length {4 * ell - 2}")
    if t < ell:
        raise ValueError(f"radius {t} below the distance floor {ell}")
    return comb(2 * ell, ell) * ball_size_max(n - 4 * ell + 2, t - ell)


@dataclass(frozen=True)
class BoundRow:
    n: int
    max_delta: int
    bound: Fraction
    ok: bool
    argmax: tuple[Word, Word]


@dataclass(frozen=True)
class BoundReport:
    ell: int
    t: int
    k: int
    n_max: int
    rows: tuple[BoundRow, ...]

    @property
    def violations(self) -> list[BoundRow]:
        return [r for r in self.rows if not r.ok]

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def tightest(self) -> BoundRow | None:
        scored = [r for r in self.rows if r.bound > 0]
        if not scored:
            return None
        return max(scored, key=lambda r: (Fraction(r.max_delta) / r.bound, r.n))


def verify_overlap_bound(ell: int, t: int, k: int, n_max: int, *, jobs: int = 1) -> BoundReport:
    """Check the intersection bound against every pair with x-length up to
    n_max: for t >= ell no pair at distance >= ell may exceed the bound, and
    for t < ell every such intersection must be empty."""
    if min(ell, t, k, n_max) < 0:
        raise ValueError("arguments must be nonnegative")
    if n_max + k > MAX_SCAN_BITS:
        raise BudgetError(f"n_max + k = {n_max + k} over the {MAX_SCAN_BITS}-bit scan budget")
    rows = []
    for n in range(max(t, 1), n_max + 1):
        table = overlap_table_scan(n, k, jobs=jobs)
        best = -1
        arg = None
        for d in range(ell, n + 1):
            b = table.best[d][t]
            if b < 0:
                continue
            pair = (table.arg_x[d][t], table.arg_y[d][t])
            if b > best or (b == best and (arg is None or pair < arg)):
                best, arg = b, pair
        if best < 0:
            continue
        bound = overlap_upper_bound(n, ell, t, k)
        rows.append(
            BoundRow(n, best, bound, best <= bound, (Word(n, arg[0]), Word(n + k, arg[1])))
        )
    return BoundReport(ell, t, k, n_max, tuple(rows))


@dataclass(frozen=True)
class RecurrenceRow:
    n: int
    lhs: int
    shorter_same_radius: int
    shorter2_smaller_radius: int
    agrees: bool

    @property
    def rhs(self) -> int:
        return self.shorter_same_radius + self.shorter2_smaller_radius


@dataclass(frozen=True)
class RecurrenceReport:
    ell: int
    t: int
    rows: tuple[RecurrenceRow, ...]

    @property
    def all_agree(self) -> bool:
        return all(r.agrees for r in self.rows)


def recurrence_report(
    ell: int, t: int, n_min: int, n_max: int, *, jobs: int = 1
) -> RecurrenceReport:
    """Compare the exhaustive value at each n against the sum of the value at
    n - 1 (same radius) and at n - 2 (radius down by one).

    This is a report, not an assertion: the recurrence is conjectural.  When
    the smaller-radius term has radius below the distance floor it is taken
    as 0, matching the empty-intersection regime.
    """
    if not 1 <= ell <= t:
        raise ValueError(f"need 1 <= ell <= t, got ell = {ell}, t = {t}")
    if n_min < t + 2:
        raise ValueError(f"n_min must be at least t + 2 = {t + 2} so every term is defined")

    def exact(n: int, radius: int) -> int:
        if radius < ell:
            return 0
        return compute_n_exhaustive(NQuery(n, ell, radius), jobs=jobs).value

    rows = []
    for n in range(n_min, n_max + 1):
        lhs = exact(n, t)
        a = exact(n - 1, t)
        b = exact(n - 2, t - 1)
        rows.append(RecurrenceRow(n, lhs, a, b, lhs == a + b))
    return RecurrenceReport(ell, t, tuple(rows))


CSV_COLUMNS = ("n", "ell", "t", "N", "method", "argmax_x", "argmax_y")


@dataclass
class NTable:
    """Computed maximum-intersection values with provenance."""

    entries: dict[tuple[int, int, int], NEntry] = field(default_factory=dict)

    def add(self, entry: NEntry) -> None:
        self.entries[(entry.n, entry.ell, entry.t)] = entry

    def get(self, n: int, ell: int, t: int) -> NEntry:
        return self.entries[(n, ell, t)]

    def rows(self) -> list[NEntry]:
        return [self.entries[k] for k in sorted(self.entries)]

    def monotone_gaps(self) -> list[tuple[int, int, int]]:
        """Triples where the value drops from n to n + 1 (a sanity report;
        monotonicity in n is plausible but unproven)."""
        gaps = []
        for (n, ell, t), e in sorted(self.entries.items()):
            nxt = self.entries.get((n + 1, ell, t))
            if nxt is not None and e.value > nxt.value:
                gaps.append((n, ell, t))
        return gaps

    def to_csv(self, path: str | Path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(CSV_COLUMNS)
            for e in self.rows():
                ax, ay = ("", "") if e.argmax is None else (e.argmax[0].text(), e.argmax[1].text())
                writer.writerow([e.n, e.ell, e.t, e.value, e.method, ax, ay])

    @classmethod
    def from_csv(cls, path: str | Path) -> "NTable":
        table = cls()
        with open(path, newline="") as fh:
            reader = csv.DictReader(fh)
            if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
                raise ValueError(f"unexpected CSV columns: {reader.fieldnames}")
            for row in reader:
                argmax = None
                if row["argmax_x"]:
                    argmax = (parse_word(row["argmax_x"]), parse_word(row["argmax_y"]))
                table.add(
                    NEntry(
                        int(row["n"]),
                        int(row["ell"]),
                        int(row["t"]),
                        int(row["N"]),
                        row["method"],
                        argmax=argmax,
                    )
                )
        return table


def build_table(
    n_max: int,
    t_max: int,
    ell_max: int | None = None,
    *,
    jobs: int = 1,
    progress: Callable[[str], None] | None = None,
) -> tuple[NTable, list[str]]:
    """Exhaustive table for all n <= n_max, t <= t_max, ell <= min(t, ell_max),
    with the bound sandwich checked on every entry.  Returns the table and a
    list of sandwich violations (expected empty)."""
    table = NTable()
    violations = []
    for n in range(2, n_max + 1):
        for t in range(1, min(t_max, n - 1) + 1):
            if progress is not None:
                progress(f"scanning n={n} t={t}")
            top = min(t, ell_max) if ell_max is not None else t
            for ell in range(0, top + 1):
                entry = compute_n_exhaustive(NQuery(n, ell, t), jobs=jobs)
                table.add(entry)
                upper = overlap_upper_bound(n, ell, t, 0)
                if entry.value > upper:
                    violations.append(
                        f"value {entry.value} over upper bound {upper} at (n={n}, ell={ell}, t={t})"
                    )
                if ell >= 1 and n >= 4 * ell - 2 and t >= ell:
                    lower = overlap_lower_bound(n, ell, t)
                    if entry.value < lower:
                        violations.append(
                            f"value {entry.value} under lower bound {lower} at (n={n}, ell={ell}, t={t})"
                        )
    return table, violations


def common_subsequence_count(x: Word, y: Word, length: int) -> int:
    """Distinct common subsequences of exactly the given length; pure-Python
    twin of the scan kernels' counting DP, exact for any packable words."""
    n, m = x.length, y.length
    if length < 0 or length > min(n, m):
        return 0
    lx0 = [0] * (n + 1)
    lx1 = [0] * (n + 1)
    for i in range(1, n + 1):
        b = x.bit(i)
        lx0[i] = i if b == 0 else lx0[i - 1]
        lx1[i] = i if b == 1 else lx1[i - 1]
    ly0 = [0] * (m + 1)
    ly1 = [0] * (m + 1)
    for j in range(1, m + 1):
        b = y.bit(j)
        ly0[j] = j if b == 0 else ly0[j - 1]
        ly1[j] = j if b == 1 else ly1[j - 1]
    prev = [[1] * (m + 1) for _ in range(n + 1)]
    for _ in range(length):
        cur = [[0] * (m + 1) for _ in range(n + 1)]
        for i in range(1, n + 1):
            i0, i1 = lx0[i], lx1[i]
            row = cur[i]
            for j in range(1, m + 1):
                total = 0
                if i0 and ly0[j]:
                    total += prev[i0 - 1][ly0[j] - 1]
                if i1 and ly1[j]:
                    total += prev[i1 - 1][ly1[j] - 1]
                row[j] = total
        prev = cur
    return prev[n][m]


def delta_fast(x: Word, y: Word, t: int, s: int) -> int:
    """Intersection size of the radius-t ball of x and the radius-s ball of
    y, by counting DP (no enumeration).  Argument order does not matter."""
    if x.length > y.length:
        x, y, t, s = y, x, s, t
    if not 0 <= t <= x.length or not 0 <= s <= y.length:
        raise ValueError(f"radii ({t}, {s}) out of range for lengths ({x.length}, {y.length})")
    if x.length - t != y.length - s:
        raise ValueError(f"member lengths differ: {x.length} - {t} != {y.length} - {s}")
    target = x.length - t
    if y.length <= _KERNEL_BIT_LIMIT:
        return int(_kernels._delta_single(x.bits, x.length, y.bits, y.length, target))
    return common_subsequence_count(x, y, target)
