#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Compare assessed metric rows against the published reference table.

Informational only: the reference values come from datasets that are not
bundled, so a mismatch here never gates a build.

    rdfqa assess fao_water_areas.nt --format csv > ours.csv
    tools/compare_published.py ours.csv [--reference data/reports/reference/original.csv]
"""
import argparse
import csv
import sys
from pathlib import Path

METRICS = [f"M{k}" for k in range(1, 11)]


def load(path):
    with open(path, newline="") as f:
        return {row["dataset"]: row for row in csv.DictReader(f)}


def main():
    here = Path(__file__).resolve().parent.parent
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("assessed", nargs="+", help="CSV files written by `rdfqa assess --format csv`")
    ap.add_argument("--reference", default=here / "data" / "reports" / "reference" / "original.csv")
    ap.add_argument("--tolerance", type=float, default=0.02)
    args = ap.parse_args()

    reference = load(args.reference)
    ours = {}
    for p in args.assessed:
        ours.update(load(p))

    compared = mismatched = 0
    for dataset, row in sorted(ours.items()):
        ref = reference.get(dataset)
        if ref is None:
            print(f"{dataset}: no reference row, skipped")
            continue
        for m in METRICS:
            if not row.get(m) or not ref.get(m):
                continue
            compared += 1
            got, want = float(row[m]), float(ref[m])
            if abs(got - want) > args.tolerance:
                mismatched += 1
                print(f"{dataset} {m}: {got:.4f} vs {want:.2f}")
    print(f"{compared - mismatched} of {compared} values within +-{args.tolerance}")
    return 0 if mismatched == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
