"""Command-line interface.

Machine-readable results go to stdout; progress and diagnostics go to
stderr.  Exit codes: 0 on success (including recurrence reports regardless
of agreement), 1 when a verified bound or closed form is violated, 2 on
usage errors and rejected budgets.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from math import comb

from .balls import count_ball, deletion_ball, intersection_size
from .codes import greedy_codebook, vt_codebook, vt_codeword_by_index, vt_decode
from .distance import deletion_distance
from .reconstruct import (
    ReconstructionError,
    explicit_trial,
    feasible_codewords,
    summarize_trials,
    vt_trial,
)
from .search import (
    NQuery,
    build_table,
    compute_n_exhaustive,
    overlap_lower_bound,
    recurrence_report,
    verify_overlap_bound,
)
from .words import extremal_pair, parse_word, seed_pair


def _default_jobs() -> int:
    env = os.environ.get("DELRECON_JOBS", "")
    if env.isdigit() and int(env) > 0:
        return int(env)
    return os.cpu_count() or 1


def _info(message: str) -> None:
    print(message, file=sys.stderr)


def cmd_ball(args: argparse.Namespace) -> int:
    w = parse_word(args.word)
    if args.count_only:
        print(count_ball(w, args.t))
        return 0
    ball = deletion_ball(w, args.t)
    members = sorted(ball.members)
    if args.json:
        print(
            json.dumps(
                {
                    "center": w.text(),
                    "t": args.t,
                    "size": ball.size,
                    "members": [m.text() for m in members],
                }
            )
        )
    else:
        for m in members:
            print(m.text())
    return 0


def cmd_dist(args: argparse.Namespace) -> int:
    result = deletion_distance(parse_word(args.x), parse_word(args.y))
    print(result.value)
    if args.witness:
        print(result.witness.text())
    return 0


def cmd_compute_n(args: argparse.Namespace) -> int:
    entry = compute_n_exhaustive(
        NQuery(args.n, args.ell, args.t, args.gap), jobs=args.jobs
    )
    _info(f"argmax: {entry.argmax[0]} {entry.argmax[1]}")
    print(entry.value)
    return 0


def cmd_verify_bounds(args: argparse.Namespace) -> int:
    report = verify_overlap_bound(args.ell, args.t, args.k, args.n_max, jobs=args.jobs)
    for row in report.rows:
        print(
            f"n={row.n} max_delta={row.max_delta} bound={row.bound} "
            f"ok={str(row.ok).lower()}"
        )
    print(f"violations={len(report.violations)}")
    if report.tightest is not None:
        _info(
            f"tightest: n={report.tightest.n} pair "
            f"{report.tightest.argmax[0]} {report.tightest.argmax[1]}"
        )
    return 0 if report.ok else 1


def cmd_conjecture(args: argparse.Namespace) -> int:
    report = recurrence_report(args.ell, args.t, args.n_min, args.n_max, jobs=args.jobs)
    for row in report.rows:
        print(
            f"n={row.n} lhs={row.lhs} rhs={row.rhs} "
            f"({row.shorter_same_radius}+{row.shorter2_smaller_radius}) "
            f"agree={str(row.agrees).lower()}"
        )
    agree = sum(1 for r in report.rows if r.agrees)
    print(f"agree={agree}/{len(report.rows)}")
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    table, violations = build_table(
        args.n_max, args.t_max, args.ell_max, jobs=args.jobs, progress=_info
    )
    table.to_csv(args.out)
    _info(f"wrote {len(table.entries)} entries to {args.out}")
    for triple in table.monotone_gaps():
        _info(f"warning: value drops from n={triple[0]} at (ell={triple[1]}, t={triple[2]})")
    for v in violations:
        _info(f"BOUND VIOLATION: {v}")
    return 1 if violations else 0


def cmd_vt(args: argparse.Namespace) -> int:
    if args.vt_command == "encode":
        print(vt_codeword_by_index(args.n, args.a, args.index).text())
        return 0
    result = vt_decode(parse_word(args.y), args.n, args.a)
    print("FAILURE" if result is None else result.text())
    return 0


def cmd_codebook(args: argparse.Namespace) -> int:
    if args.kind == "vt":
        book = vt_codebook(args.n, args.a)
    else:
        book = greedy_codebook(args.n, args.ell)
    for w in book.words:
        print(w.text())
    _info(f"{len(book)} codewords ({book.kind}, corrects {book.capability})")
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    m = args.m if args.m is not None else comb(2 * args.t, args.t) + 1
    trials = []
    if args.code == "vt":
        for i in range(args.trials):
            trials.append(
                vt_trial(args.n, args.a, args.t, m, args.seed + i, args.max_draws)
            )
    else:
        book = greedy_codebook(args.n, args.t)
        feasible = feasible_codewords(book, args.t, m)
        if not feasible:
            raise ReconstructionError(
                f"no greedy codeword of length {args.n} supports {m} distinct reads"
            )
        rng = random.Random(args.seed)
        for i in range(args.trials):
            x = feasible[rng.randrange(len(feasible))]
            trials.append(
                explicit_trial(book, x, args.t, m, args.seed + i, args.max_draws)
            )
    for tr in trials:
        print(
            json.dumps(
                {
                    "seed": tr.seed,
                    "codeword": tr.codeword.text(),
                    "reads": [r.text() for r in tr.reads],
                    "recovered": None if tr.recovered is None else tr.recovered.text(),
                    "ok": tr.ok,
                    "micros": tr.micros,
                }
            )
        )
    print(json.dumps({"summary": summarize_trials(trials)}))
    return 0


def cmd_construct_pair(args: argparse.Namespace) -> int:
    ell = args.ell
    seed_a, seed_b = seed_pair(ell)
    x, y = extremal_pair(args.n, ell)
    t = args.t if args.t is not None else ell
    overlap = intersection_size(x, y, t, t).size
    print(f"seed_a={seed_a}")
    print(f"seed_b={seed_b}")
    print(f"x={x}")
    print(f"y={y}")
    print(f"distance={deletion_distance(x, y).value}")
    print(f"overlap_t{t}={overlap}")
    print(f"lower_bound={overlap_lower_bound(args.n, ell, t)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="delrecon",
        description="Deletion-channel combinatorics: balls, extremal intersections, "
        "deletion codes, and multi-read reconstruction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ball", help="enumerate or count a deletion ball")
    p.add_argument("--word", required=True, help="center word as a 0/1 string")
    p.add_argument("--t", type=int, required=True, help="deletion radius")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_ball)

    p = sub.add_parser("dist", help="deletion Levenshtein distance")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--witness", action="store_true", help="also print one maximal common subsequence")
    p.set_defaults(handler=cmd_dist)

    p = sub.add_parser("compute-n", help="exhaustive maximum ball intersection")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True, help="distance floor")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--gap", type=int, default=0, help="length gap k (second word longer)")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.set_defaults(handler=cmd_compute_n)

    p = sub.add_parser("verify-bounds", help="check the intersection bound over all pairs")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.set_defaults(handler=cmd_verify_bounds)

    p = sub.add_parser("conjecture", help="recurrence comparison report")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.set_defaults(handler=cmd_conjecture)

    p = sub.add_parser("table", help="write the exhaustive value table as CSV")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--ell-max", type=int, default=None)
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("vt", help="weighted-checksum code operations")
    vt_sub = p.add_subparsers(dest="vt_command", required=True)
    e = vt_sub.add_parser("encode", help="codeword by index in the residue class")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--a", type=int, required=True)
    e.add_argument("--index", type=int, required=True)
    d = vt_sub.add_parser("decode", help="recover from one deletion")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--a", type=int, required=True)
    d.add_argument("--y", required=True)
    p.set_defaults(handler=cmd_vt)

    p = sub.add_parser("codebook", help="export a codebook as newline-separated bitstrings")
    p.add_argument("--kind", choices=("vt", "greedy"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, default=0, help="residue (vt)")
    p.add_argument("--ell", type=int, default=2, help="distance floor (greedy)")
    p.set_defaults(handler=cmd_codebook)

    p = sub.add_parser("simulate", help="seeded channel round trips, JSON lines")
    p.add_argument("--code", choices=("vt", "greedy"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--m", type=int, default=None, help="reads per trial (default C(2t,t)+1)")
    p.add_argument("--a", type=int, default=0, help="residue for the vt code")
    p.add_argument("--max-draws", type=int, default=None)
    p.set_defaults(handler=cmd_simulate)

    p = sub.add_parser("construct-pair", help="seed and padded extremal pair with their overlap")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--t", type=int, default=None, help="overlap radius (default ell)")
    p.set_defaults(handler=cmd_construct_pair)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, ReconstructionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
