#!/usr/bin/env python3
"""Contrast pre-image density evidence for the tent map, a conjugated tent
map, and the attracting example.

The max-gap sequence of the first two shrinks geometrically; the attracting
example stays pinned above the trapped interval's length at every depth.
"""

from __future__ import annotations

import argparse
from fractions import Fraction

from plmaps import PLMap, conjugate_map, density_report, format_rational, tent
from plmaps.fixtures import TRAPPED_INTERVAL, attracting_example, wandering_gap_bound

F = Fraction


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=int, default=12)
    args = ap.parse_args()

    h = PLMap.from_pairs([(0, 0), (F(1, 3), F(1, 2)), (1, 1)])
    subjects = [
        ("tent", tent()),
        ("conjugated tent", conjugate_map(tent(), h)),
        ("attracting example", attracting_example()),
    ]
    bound = wandering_gap_bound(attracting_example(), *TRAPPED_INTERVAL)
    print(f"trapped-interval lower bound for the attracting example: "
          f"{format_rational(bound)} = {float(bound):.4f}\n")
    header = f"{'depth':>5}" + "".join(f"{name:>22}" for name, _ in subjects)
    print(header)
    reports = [density_report(g, args.depth) for _, g in subjects]
    for n in range(args.depth):
        row = f"{n + 1:>5}"
        for gaps in reports:
            row += f"{float(gaps[n]):>22.6f}"
        print(row)


if __name__ == "__main__":
    main()
