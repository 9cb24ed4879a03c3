#!/usr/bin/env python3
"""Sweep the conjectured recurrence value(n) = value(n-1) + value(n-2, t-1)
over a grid of distance floors and radii and write the comparison as CSV.

The recurrence is checked, never assumed: disagreements are expected at
small n and the point of the sweep is to see where they stop.
"""

import argparse
import csv
import sys

from delrecon.search import recurrence_report


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ell-max", type=int, default=2)
    ap.add_argument("--extra-radius", type=int, default=1, help="check t in [ell, ell + this]")
    ap.add_argument("--n-max", type=int, default=11)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", default="-", help="CSV path, or - for stdout")
    args = ap.parse_args()

    sink = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    writer = csv.writer(sink)
    writer.writerow(["ell", "t", "n", "lhs", "rhs", "agrees"])
    disagreements = 0
    for ell in range(1, args.ell_max + 1):
        for t in range(ell, ell + args.extra_radius + 1):
            if t + 2 > args.n_max:
                continue
            print(f"scanning ell={ell} t={t}", file=sys.stderr)
            report = recurrence_report(ell, t, t + 2, args.n_max, jobs=args.jobs)
            for row in report.rows:
                writer.writerow([ell, t, row.n, row.lhs, row.rhs, row.agrees])
                disagreements += 0 if row.agrees else 1
    if sink is not sys.stdout:
        sink.close()
    print(f"done; {disagreements} disagreements (small n expected)", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
