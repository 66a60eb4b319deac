#!/usr/bin/env python3
# Copyright 2026 The hypercut Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Least-squares slope of log(surplus) against log(m) for a scaling CSV.

Usage: hypercut experiment --kind scaling --out rows.csv && fit_scaling.py rows.csv
"""

import argparse
import csv
import math
import statistics
import sys
from collections import defaultdict


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("csv", help="output of `hypercut experiment --kind scaling`")
    args = parser.parse_args()

    xs, ys = [], []
    by_n = defaultdict(list)
    skipped = 0
    with open(args.csv, newline="") as f:
        for row in csv.DictReader(line for line in f if not line.startswith("#")):
            m, surplus = int(row["m"]), float(row["surplus"])
            by_n[int(row["n"])].append((m, surplus))
            if m <= 0 or surplus <= 0:
                skipped += 1
                continue
            xs.append(math.log(m))
            ys.append(math.log(surplus))

    for n in sorted(by_n):
        rows = by_n[n]
        mean_m = statistics.fmean(m for m, _ in rows)
        mean_s = statistics.fmean(s for _, s in rows)
        print(f"n={n} reps={len(rows)} mean_m={mean_m:.1f} mean_surplus={mean_s:.2f} "
              f"mean_surplus/sqrt(m)={mean_s / math.sqrt(mean_m):.3f}")
    if skipped:
        print(f"skipped {skipped} rows with non-positive m or surplus", file=sys.stderr)
    if len(set(xs)) < 2:
        print("need at least two distinct m values to fit a slope", file=sys.stderr)
        return 1
    fit = statistics.linear_regression(xs, ys)
    print(f"slope={fit.slope:.4f} intercept={fit.intercept:.4f} points={len(xs)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
