#!/usr/bin/env python3
"""Run the full identity catalog at acceptance scale and save the JSON report.

Usage:
    python scripts/run_verification.py [--n-max 8] [--m-set 1,2,3]
                                       [--r-set 1,2,3] [--seed 0]
                                       [--out verification_report.json]

Exit code 0 when every identity passes (discrepancy findings are reported,
not counted as failures), 1 otherwise.
"""

import argparse
import json
import sys
import time

from dowlab import all_passed, report_document, verify_all


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=8)
    parser.add_argument("--m-set", default="1,2,3")
    parser.add_argument("--r-set", default="1,2,3")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default="verification_report.json")
    args = parser.parse_args()

    m_set = tuple(int(v) for v in args.m_set.split(","))
    r_set = tuple(int(v) for v in args.r_set.split(","))

    started = time.time()
    reports = verify_all(args.n_max, m_set, r_set, args.seed)
    elapsed = time.time() - started

    for report in reports:
        line = f"{report.status:18s} {report.id:24s} ({report.params_tested} points)"
        print(line)
        if report.finding:
            print(f"{'':18s} finding: {report.finding}")
        if report.counterexample:
            print(f"{'':18s} counterexample: {json.dumps(report.counterexample)}")

    document = report_document(reports, args.n_max, m_set, r_set, args.seed)
    with open(args.out, "w") as handle:
        json.dump(document, handle, indent=2)
        handle.write("\n")
    print(f"\n{len(reports)} identities in {elapsed:.1f}s -> {args.out}")
    return 0 if all_passed(reports) else 1


if __name__ == "__main__":
    sys.exit(main())
