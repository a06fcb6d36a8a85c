#!/usr/bin/env python3
"""Run the strong-preserver searches that support the vertex-permutation theorem.

Four desk-scale runs, printed as one summary line each:

  1. n=4 sum, exhaustive over all 720 edge bijections;
  2. n=4 product, exhaustive (the open-question probe: membership there is
     decided by the edge count alone, so every bijection survives);
  3. n=5 product, exhaustive over all 10! edge bijections;
  4. n=6 orientability: all 720 vertex permutations verified exactly, then a
     seeded sample of random non-vertex bijections, every failure re-verified.

Example:
    python3 scripts/preserver_theorem_runs.py --sample-count 5000 --seed 0
"""

import argparse
import sys
import time

from cordia import GraphProperty, membership_bitmap, search_strong_preservers
from cordia.preserver import is_vertex_permutation


def summarize(label, report, start):
    vertex = sum(1 for op in report.operators if is_vertex_permutation(op) is not None)
    print(
        f"{label}: checked={report.candidates_checked} survivors={len(report.operators)} "
        f"vertex-induced={vertex} failures-recorded={len(report.failures)} "
        f"[{time.perf_counter() - start:.1f}s]"
    )


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sample-count", type=int, default=100_000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument(
        "--skip-exhaustive-five", action="store_true", help="skip the 10! run at n=5"
    )
    args = parser.parse_args()

    t = time.perf_counter()
    report = search_strong_preservers(4, GraphProperty.SUM, "exhaustive")
    summarize("n=4 sum       exhaustive", report, t)

    t = time.perf_counter()
    report = search_strong_preservers(4, GraphProperty.PRODUCT, "exhaustive")
    summarize("n=4 product   exhaustive", report, t)

    if not args.skip_exhaustive_five:
        t = time.perf_counter()
        report = search_strong_preservers(5, GraphProperty.PRODUCT, "exhaustive")
        summarize("n=5 product   exhaustive", report, t)

    t = time.perf_counter()
    report = search_strong_preservers(6, GraphProperty.ORIENT23, "vertex-only")
    summarize("n=6 orient23  vertex-only", report, t)

    t = time.perf_counter()
    sample = search_strong_preservers(
        6,
        GraphProperty.ORIENT23,
        "sample",
        count=args.sample_count,
        seed=args.seed,
        workers=args.workers,
    )
    summarize("n=6 orient23  sample     ", sample, t)

    bm = membership_bitmap(6, GraphProperty.ORIENT23)
    bad = 0
    for failure in sample.failures:
        g = failure.counterexample.edges
        img = 0
        for k in range(15):
            if g >> k & 1:
                img |= 1 << failure.edge_map[k]
        if not (bm >> g ^ bm >> img) & 1:
            bad += 1
    print(
        f"counterexample re-verification: {len(sample.failures) - bad} of "
        f"{len(sample.failures)} confirmed against the membership table"
    )
    return 0 if bad == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
