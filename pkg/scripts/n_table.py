#!/usr/bin/env python3
"""Build the exhaustive maximum-intersection table and check the bound
sandwich on every entry.

Example:
    python scripts/n_table.py --n-max 10 --t-max 3 --out results/table.csv
"""

import argparse
import sys
from pathlib import Path

from delrecon.search import build_table


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=10)
    ap.add_argument("--t-max", type=int, default=3)
    ap.add_argument("--ell-max", type=int, default=None)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", default="table.csv")
    args = ap.parse_args()

    table, violations = build_table(
        args.n_max,
        args.t_max,
        args.ell_max,
        jobs=args.jobs,
        progress=lambda msg: print(msg, file=sys.stderr),
    )
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    table.to_csv(args.out)
    print(f"{len(table.entries)} entries -> {args.out}")
    for triple in table.monotone_gaps():
        print(f"monotonicity gap at (n, ell, t) = {triple}")
    for v in violations:
        print(f"BOUND VIOLATION: {v}")
    return 1 if violations else 0


if __name__ == "__main__":
    sys.exit(main())
