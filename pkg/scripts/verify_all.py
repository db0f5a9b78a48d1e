"""Reproduce the full verification run: for every catalog label, compute the
matching orbit diagrams, compare their span with the (-w0)-fixed subspace,
re-check the published basis, and summarize per family.

Usage:
    PYTHONPATH=src python3 scripts/verify_all.py [--bound N] [--json FILE]
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter

sys.path.insert(0, "src")

from orbitspan.satake import catalog_labels, underlying_type  # noqa: E402
from orbitspan.spanverify import verify_theorem  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--bound", type=int, default=12)
    parser.add_argument("--json", help="also write one JSON report per line to this file")
    args = parser.parse_args()

    start = time.monotonic()
    labels = catalog_labels(args.bound)
    by_family: Counter[str] = Counter()
    records = []
    failures = []
    for label in labels:
        report = verify_theorem(label)
        records.append(report.to_json())
        by_family[underlying_type(label).family] += 1
        ok = report.theorem_holds and report.easy_inclusion_holds and report.paper_basis_verified
        if not ok:
            failures.append(str(label))
        print(
            f"{label!s:12s} {report.simple_type!s:4s} dim_b={report.dim_b} "
            f"dim_span={report.dim_span} theorem={report.theorem_holds} "
            f"inclusion={report.easy_inclusion_holds} paper_basis={report.paper_basis_verified}"
        )
    elapsed = time.monotonic() - start

    if args.json:
        with open(args.json, "w") as fh:
            for record in records:
                fh.write(json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n")

    print()
    print(f"labels checked: {len(labels)} in {elapsed:.1f}s "
          f"({', '.join(f'{fam}:{n}' for fam, n in sorted(by_family.items()))})")
    if failures:
        print(f"FAILURES: {failures}")
        return 1
    print("every label verified: span(matching diagrams) = fixed subspace, "
          "inclusion holds, published bases confirmed")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
