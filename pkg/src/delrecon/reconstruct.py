"""The t-deletion channel, the two-read candidate construction, and the
three-step multi-read reconstruction, plus the seeded experiment harness."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable, Sequence

from .balls import count_ball, is_subsequence
from .codes import Codebook, vt_decoder, vt_syndrome
from .words import Word, delete_positions, suffix


class ReconstructionError(RuntimeError):
    """The read set is inconsistent with every decoded candidate."""


class AmbiguousReadsError(ReconstructionError):
    """Two distinct codewords contain every read; that contradicts the
    read-count assumption (more distinct reads than any pairwise ball
    intersection) and indicates the assumption does not hold for the code."""


class InsufficientDiversityError(ValueError):
    """The channel cannot produce the requested number of distinct reads."""


class DrawBudgetError(ReconstructionError):
    """Rejection sampling exhausted its draw budget before collecting enough
    distinct reads."""


@dataclass(frozen=True)
class ReadSet:
    """Distinct outputs of a t-deletion channel applied to one length-n word."""

    n: int
    t: int
    reads: tuple[Word, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.t <= self.n:
            raise ValueError(f"deletion count {self.t} outside [0, {self.n}]")
        if len(set(self.reads)) != len(self.reads):
            raise ValueError("reads must be distinct")
        for r in self.reads:
            if r.length != self.n - self.t:
                raise ValueError(f"read length {r.length}, expected {self.n - self.t}")


@dataclass(frozen=True)
class CandidatePair:
    """The two single-insertion candidates built from two distinct reads:
    with u the longest common suffix, the read ending ...0u gains a 1 after
    its 0, and the read ending ...1u gains a 0 after its 1."""

    c1: Word
    c2: Word
    u: Word


def _delete_random(x: Word, t: int, rng: random.Random) -> Word:
    return delete_positions(x, rng.sample(range(1, x.length + 1), t))


def deletion_channel(x: Word, t: int, seed: int) -> Word:
    """One channel use: delete a uniformly random t-subset of positions."""
    if t > x.length:
        raise ValueError(f"cannot delete {t} of {x.length} bits")
    return _delete_random(x, t, random.Random(seed))


def collect_distinct_reads(
    x: Word, t: int, m: int, seed: int, max_draws: int | None = None
) -> ReadSet:
    """Sample the channel until m distinct reads are seen, in first-appearance
    order.  Reproducible from the seed.

    Checks up front that the deletion ball is large enough, and gives up
    after max_draws channel uses (default 64 * m) otherwise.
    """
    if m < 1:
        raise ValueError(f"need at least one read, got m = {m}")
    ball = count_ball(x, t)
    if ball < m:
        raise InsufficientDiversityError(
            f"only {ball} distinct reads exist for this word at t = {t}, need {m}"
        )
    budget = 64 * m if max_draws is None else max_draws
    rng = random.Random(seed)
    seen = set()
    reads = []
    for _ in range(budget):
        r = _delete_random(x, t, rng)
        if r not in seen:
            seen.add(r)
            reads.append(r)
            if len(reads) == m:
                return ReadSet(x.length, t, tuple(reads))
    raise DrawBudgetError(
        f"collected {len(reads)} of {m} distinct reads in {budget} draws"
    )


def longest_common_suffix(y1: Word, y2: Word) -> Word:
    count = 0
    limit = min(y1.length, y2.length)
    diff = y1.bits ^ y2.bits
    while count < limit and not (diff >> count) & 1:
        count += 1
    return suffix(y1, count)


def candidates_from_two_reads(y1: Word, y2: Word) -> CandidatePair:
    """Build both candidates one deletion closer to the transmitted word.

    At least one of them is guaranteed to be within radius t - 1 of any
    common radius-t center of the two reads.
    """
    if y1.length != y2.length:
        raise ValueError(f"read lengths differ: {y1.length} vs {y2.length}")
    if y1 == y2:
        raise ValueError("reads must be distinct")
    u = longest_common_suffix(y1, y2)
    u_len = u.length
    # the bits just before the common suffix differ; orient on the 0 side
    if (y1.bits >> u_len) & 1:
        ya, yb = y2, y1
    else:
        ya, yb = y1, y2
    head_a = ya.bits >> (u_len + 1)
    head_b = yb.bits >> (u_len + 1)
    length = y1.length + 1
    c1 = Word(length, (head_a << (u_len + 2)) | (1 << u_len) | u.bits)
    c2 = Word(length, (head_b << (u_len + 2)) | (2 << u_len) | u.bits)
    return CandidatePair(c1, c2, u)


def reconstruct(rs: ReadSet, decode: Callable[[Word], Word | None]) -> Word:
    """Recover the transmitted word from distinct channel outputs.

    Steps: build the two candidates from the first two reads, decode both,
    and keep the decoded codeword whose ball contains every read.  Both
    candidates are fully verified; if two distinct codewords pass, the
    read-count assumption is violated and that is raised rather than guessed.
    """
    if len(rs.reads) < 2:
        raise ValueError(f"need at least two reads, got {len(rs.reads)}")
    pair = candidates_from_two_reads(rs.reads[0], rs.reads[1])
    x1 = decode(pair.c1)
    x2 = decode(pair.c2)
    if x1 is None and x2 is None:
        raise ReconstructionError("both candidate decodes failed")
    ok1 = x1 is not None and all(is_subsequence(r, x1) for r in rs.reads)
    ok2 = x2 is not None and all(is_subsequence(r, x2) for r in rs.reads)
    if ok1 and ok2:
        if x1 == x2:
            return x1
        raise AmbiguousReadsError(
            f"both {x1} and {x2} contain all {len(rs.reads)} reads"
        )
    if ok1:
        return x1
    if ok2:
        return x2
    raise ReconstructionError("no decoded candidate contains every read")


@dataclass(frozen=True)
class TrialRecord:
    seed: int
    codeword: Word
    reads: tuple[Word, ...]
    recovered: Word | None
    ok: bool
    micros: float


def _timed_reconstruct(
    x: Word, rs: ReadSet, decode: Callable[[Word], Word | None], seed: int
) -> TrialRecord:
    start = time.perf_counter_ns()
    try:
        recovered = reconstruct(rs, decode)
    except ReconstructionError:
        recovered = None
    micros = (time.perf_counter_ns() - start) / 1000.0
    return TrialRecord(seed, x, rs.reads, recovered, recovered == x, micros)


def sample_vt_codeword(
    n: int, a: int, t: int, m: int, rng: random.Random, max_attempts: int = 100_000
) -> Word:
    """Uniform random residue-a codeword whose radius-t ball has at least m
    members, by rejection."""
    for _ in range(max_attempts):
        w = Word(n, rng.getrandbits(n))
        if vt_syndrome(w) == a and count_ball(w, t) >= m:
            return w
    raise InsufficientDiversityError(
        f"no diversity-feasible codeword found in {max_attempts} attempts"
    )


def vt_trial(
    n: int, a: int, t: int, m: int, seed: int, max_draws: int | None = None
) -> TrialRecord:
    """One seeded round trip through the channel with the arithmetic decoder."""
    rng = random.Random(seed)
    x = sample_vt_codeword(n, a, t, m, rng)
    rs = collect_distinct_reads(x, t, m, seed=rng.randrange(1 << 48), max_draws=max_draws)
    return _timed_reconstruct(x, rs, vt_decoder(n, a), seed)


def feasible_codewords(cb: Codebook, t: int, m: int) -> list[Word]:
    """Codewords whose radius-t ball can supply m distinct reads."""
    return [w for w in cb.words if count_ball(w, t) >= m]


def explicit_trial(
    cb: Codebook, x: Word, t: int, m: int, seed: int, max_draws: int | None = None
) -> TrialRecord:
    """One seeded round trip for a materialized codebook, decoded by scan."""
    if cb.capability < t - 1:
        raise ValueError(
            f"code corrects {cb.capability} deletions; reconstruction at t = {t} "
            f"needs at least {t - 1}"
        )
    rs = collect_distinct_reads(x, t, m, seed=seed, max_draws=max_draws)
    return _timed_reconstruct(x, rs, cb.decoder(), seed)


def summarize_trials(trials: Sequence[TrialRecord]) -> dict:
    """Recovery rate and timing percentiles over a batch of trials."""
    if not trials:
        raise ValueError("no trials to summarize")
    times = sorted(t.micros for t in trials)

    def pct(p: float) -> float:
        idx = min(len(times) - 1, round(p * (len(times) - 1)))
        return times[int(idx)]

    recovered = sum(1 for t in trials if t.ok)
    return {
        "trials": len(trials),
        "recovered": recovered,
        "recovery_rate": recovered / len(trials),
        "micros_p50": pct(0.50),
        "micros_p90": pct(0.90),
        "micros_max": times[-1],
    }
