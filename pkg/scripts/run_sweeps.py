#!/usr/bin/env python3
"""Run the decider-vs-oracle verification sweeps and print one report each.

The full budgets (binary n<=14, ternary n<=8) take a few seconds; --quick
trims them for a smoke run. Exits non-zero if any sweep finds a mismatch.
"""

import argparse
import json
import sys

from epiword import sweep


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--quick", action="store_true", help="smaller length budgets")
    ap.add_argument("--json", action="store_true", help="one JSON report per line")
    args = ap.parse_args()

    jobs = [
        ("episturmian", 2, 10 if args.quick else 14),
        ("sturmian", 2, 10 if args.quick else 14),
        ("episturmian", 3, 6 if args.quick else 8),
    ]
    any_failed = False
    for check, size, max_len in jobs:
        report = sweep(check, size, max_len)
        if args.json:
            print(json.dumps(report.to_json_dict(include_timing=True), sort_keys=True))
        else:
            print(
                f"{check:12s} alphabet={size} n<={max_len:2d}: "
                f"{report.total_words:6d} words, "
                f"{len(report.mismatches)} mismatches, "
                f"{report.elapsed_seconds:.1f}s"
            )
            for w, d, o in report.mismatches:
                print(f"  mismatch word={w} decider={d} oracle={o}")
        any_failed = any_failed or not report.passed
    return 1 if any_failed else 0


if __name__ == "__main__":
    sys.exit(main())
