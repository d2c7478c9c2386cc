#!/usr/bin/env python3
"""Fit conjugacies for a few conjugated tent maps and print the power-law
profile of each fit near 0.

For a conjugacy that is linear near the origin the profile coefficient is
constant and equals the initial slope; the attracting example never yields
a stabilized fit, so its profile is reported as not applicable.
"""

from __future__ import annotations

import argparse
from fractions import Fraction

from plmaps import PLMap, conjugate_map, fit_conjugacy, power_law_check, tent
from plmaps.fixtures import attracting_example

F = Fraction

HOMEOS = {
    "identity": PLMap.identity(),
    "slope 3/2 start": PLMap.from_pairs([(0, 0), (F(1, 2), F(3, 4)), (1, 1)]),
    "slope 2 start": PLMap.from_pairs([(0, 0), (F(1, 8), F(1, 4)), (F(5, 8), F(3, 4)), (1, 1)]),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=int, default=9)
    ap.add_argument("--tolerance", type=float, default=1e-9)
    args = ap.parse_args()

    subjects = [(name, conjugate_map(tent(), h)) for name, h in HOMEOS.items()]
    subjects.append(("attracting example", attracting_example()))

    for name, g in subjects:
        fit = fit_conjugacy(g, args.depth)
        report = power_law_check(g, args.depth, args.tolerance)
        if not report.applicable:
            print(f"{name:<22} stabilized={fit.stabilized!s:<5} {report.reason}")
            continue
        print(
            f"{name:<22} stabilized={fit.stabilized!s:<5} "
            f"alpha={report.alpha:.6f} omega={report.omega:.6f} "
            f"spread={report.max_relative_spread:.3e} "
            f"within_tolerance={report.within_tolerance}"
        )


if __name__ == "__main__":
    main()
