#!/usr/bin/env python3
"""Write the bundled example maps into the fixtures/ directory.

Exports the tent map, the sawtooths xi(2)..xi(7), a sample conjugating
homeomorphism with its conjugated tent map, and the attracting example
whose zero pre-images are provably not dense.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

from plmaps import PLMap, conjugate_map, tent, xi
from plmaps.fixtures import attracting_example
from plmaps.formats import plmap_to_json

F = Fraction

H_DEMO = PLMap.from_pairs([(0, 0), (F(1, 4), F(3, 5)), (1, 1)])


def export(directory: Path) -> list[str]:
    directory.mkdir(parents=True, exist_ok=True)
    maps = {
        "tent.map": tent(),
        "attracting.map": attracting_example(),
        "h_demo.map": H_DEMO,
        "conj_demo.map": conjugate_map(tent(), H_DEMO),
    }
    for t in range(2, 8):
        maps[f"xi{t}.map"] = xi(t)
    written = []
    for name, m in sorted(maps.items()):
        (directory / name).write_text(plmap_to_json(m))
        written.append(name)
    return written


if __name__ == "__main__":
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("fixtures")
    for name in export(target):
        print(f"wrote {target / name}")
