#!/usr/bin/env python3
"""Survey closed-form edge bounds against exhaustive empirical maxima.

For every requested (property, vertex count) cell, print the bound, the
alternate bound where one exists, the exhaustively computed maximum, the
witness graph, and whether the bound is attained.  Ends with the smallest
failing classes per property.

Example:
    python3 scripts/extremal_survey.py --property sum product --edge-cap 4
"""

import argparse
import json
import sys

from cordia import GraphProperty, minimal_noncordial, survey, to_graph6

DEFAULT_RANGES = {
    GraphProperty.SUM: range(4, 9),
    GraphProperty.PRODUCT: range(4, 8),
    GraphProperty.ORIENT23: range(6, 8),
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--property",
        nargs="+",
        choices=[p.value for p in GraphProperty],
        default=[p.value for p in GraphProperty],
    )
    parser.add_argument("--edge-cap", type=int, default=4, help="minimal-failure scan limit")
    parser.add_argument("--json", action="store_true", help="emit one JSON object instead of text")
    args = parser.parse_args()

    props = [GraphProperty(v) for v in args.property]
    cells = []
    for prop in props:
        for n in DEFAULT_RANGES[prop]:
            report = survey(prop, n)
            cells.append(report)

    def relation(r):
        best = r.bound if r.alternate_bound is None else max(r.bound, r.alternate_bound)
        if r.empirical_max == best:
            return "attained"
        return "exceeds" if r.empirical_max > best else "below"

    if args.json:
        payload = {
            "cells": [
                {
                    "alternate_bound": r.alternate_bound,
                    "bound": r.bound,
                    "empirical_max": r.empirical_max,
                    "n": r.n,
                    "property": r.property.value,
                    "relation": relation(r),
                    "witness": to_graph6(r.witness),
                }
                for r in cells
            ],
            "minimal_failures": {
                prop.value: [
                    {"edges": m, "graph6": to_graph6(g)}
                    for m, g in minimal_noncordial(prop, args.edge_cap)
                ]
                for prop in props
            },
        }
        json.dump(payload, sys.stdout, indent=2, sort_keys=True)
        print()
        return 0

    print(f"{'property':10s} {'n':>2s} {'bound':>6s} {'alt':>4s} {'found':>6s}  witness")
    for r in cells:
        alt = "-" if r.alternate_bound is None else str(r.alternate_bound)
        note = relation(r)
        print(
            f"{r.property.value:10s} {r.n:2d} {r.bound:6d} {alt:>4s} {r.empirical_max:6d}"
            f"  {to_graph6(r.witness):12s} {note.upper() if note == 'exceeds' else note}"
        )
    print()
    for prop in props:
        rows = minimal_noncordial(prop, args.edge_cap)
        listing = ", ".join(f"{to_graph6(g)} (m={m})" for m, g in rows) or "none"
        print(f"smallest failing classes, {prop.value} (m <= {args.edge_cap}): {listing}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
