#!/usr/bin/env python3
"""Export every triangle family to CSV and JSON under an output directory.

Usage:
    python scripts/export_triangles.py [--n-max 8] [--m 2] [--r 2] [--out-dir triangles]
"""

import argparse
import json
import os
import sys

from dowlab import Family, build_triangle


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=8)
    parser.add_argument("--m", type=int, default=2)
    parser.add_argument("--r", type=int, default=2)
    parser.add_argument("--out-dir", default="triangles")
    args = parser.parse_args()

    os.makedirs(args.out_dir, exist_ok=True)
    for family in Family:
        triangle = build_triangle(family, args.m, args.r, args.n_max)
        rows = [
            [str(triangle.value(n, k)) for k in range(n + 1)]
            for n in range(args.n_max + 1)
        ]
        stem = os.path.join(args.out_dir, family.value)
        with open(stem + ".csv", "w") as handle:
            for row in rows:
                handle.write(", ".join(row) + "\n")
        document = {
            "family": family.value,
            "m": triangle.m,
            "r": triangle.r,
            "lambda": "symbolic",
            "n_max": args.n_max,
            "rows": rows,
        }
        with open(stem + ".json", "w") as handle:
            json.dump(document, handle, indent=2)
            handle.write("\n")
        print(f"wrote {stem}.csv and {stem}.json")
    return 0


if __name__ == "__main__":
    sys.exit(main())
