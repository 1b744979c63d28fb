#!/usr/bin/env python3
"""Run the full headline reproduction: build the VS chains, certify the
obstruction, run both bounded searches, and repeat for the rotated variants.

Equivalent to ``reslat paper``; kept as a script so the experiment is one
file you can read top to bottom and tweak (bounds, rotations, budgets).
"""

import argparse
import sys

from reslat.cli import paper_report
from reslat.completion import Budget
from reslat.documents import dumps_canonical


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=9, help="search bound for amalgam carriers")
    ap.add_argument("--rotations", default="identity:2,const-1:2")
    ap.add_argument("--budget", type=int, default=10**8, help="node budget per completion search")
    ap.add_argument("--json", action="store_true", help="emit the composite JSON report")
    args = ap.parse_args()

    rotations = []
    for item in args.rotations.split(","):
        name, levels = item.strip().split(":")
        rotations.append((name, int(levels)))

    report, lines = paper_report(args.max_size, rotations, Budget(max_nodes=args.budget))
    if args.json:
        print(dumps_canonical(report))
    else:
        print("\n".join(lines))
        print()
        for c in report["conclusions"]:
            print(f"- {c}")
    return 0 if report["ok"] else 1


if __name__ == "__main__":
    sys.exit(main())
