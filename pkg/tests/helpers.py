"""Shared exact-map builders for the test suite."""

from __future__ import annotations

from fractions import Fraction

from plmaps import PLMap, UnimodalMap, build_commutator, conjugate_map, tent, xi

F = Fraction

#: Increasing PL homeomorphisms of [0, 1] used as conjugacies throughout.
SAMPLE_HOMEOS = [
    PLMap.from_pairs([(0, 0), (F(1, 3), F(1, 2)), (1, 1)]),
    PLMap.from_pairs([(0, 0), (F(1, 4), F(3, 5)), (1, 1)]),
    PLMap.from_pairs([(0, 0), (F(1, 4), F(1, 8)), (F(3, 4), F(1, 2)), (1, 1)]),
    PLMap.from_pairs([(0, 0), (F(1, 8), F(1, 4)), (F(5, 8), F(3, 4)), (1, 1)]),
    PLMap.from_pairs(
        [(0, 0), (F(1, 5), F(2, 7)), (F(2, 5), F(1, 2)), (F(3, 5), F(5, 8)),
         (F(4, 5), F(6, 7)), (1, 1)]
    ),
]

#: Homeomorphisms whose kink abscissas all sit on the 1/64 lattice, so the
#: conjugacy fit stabilizes by depth 8 (grids contain multiples of 1/64
#: from depth 7 on).
DYADIC_HOMEOS = [
    PLMap.from_pairs([(0, 0), (F(1, 2), F(3, 4)), (1, 1)]),
    PLMap.from_pairs([(0, 0), (F(1, 8), F(1, 4)), (F(5, 8), F(3, 4)), (1, 1)]),
    PLMap.from_pairs(
        [(0, 0), (F(1, 64), F(1, 10)), (F(3, 8), F(1, 2)), (F(13, 16), F(7, 8)), (1, 1)]
    ),
]


def frac(rng, max_den: int = 32, lo: Fraction = F(0), hi: Fraction = F(1)) -> Fraction:
    """Random rational strictly between lo and hi."""
    while True:
        den = rng.randint(2, max_den)
        num = rng.randint(1, den - 1)
        q = lo + (hi - lo) * F(num, den)
        if lo < q < hi:
            return q


def distinct_sorted(rng, count: int, max_den: int = 32) -> list[Fraction]:
    vals: set[Fraction] = set()
    while len(vals) < count:
        vals.add(frac(rng, max_den))
    return sorted(vals)


def random_homeomorphism(rng, max_kinks: int = 6, lattice: int | None = None) -> PLMap:
    """Random increasing PL homeomorphism; kinks on multiples of 1/lattice
    when a lattice is given."""
    kinks = rng.randint(1, max_kinks)
    if lattice is not None:
        xs = [F(i, lattice) for i in sorted(rng.sample(range(1, lattice), kinks))]
    else:
        xs = distinct_sorted(rng, kinks)
    ys = distinct_sorted(rng, kinks)
    pairs = [(F(0), F(0)), *zip(xs, ys), (F(1), F(1))]
    return PLMap.from_pairs(pairs)


def random_unimodal(rng, max_side_kinks: int = 3) -> UnimodalMap:
    """Random unimodal map with rational breakpoints."""
    v = frac(rng, 16)
    nl = rng.randint(0, max_side_kinks)
    nr = rng.randint(0, max_side_kinks)
    left = zip((v * q for q in distinct_sorted(rng, nl)), distinct_sorted(rng, nl))
    right = zip(
        (v + (1 - v) * q for q in distinct_sorted(rng, nr)),
        sorted(distinct_sorted(rng, nr), reverse=True),
    )
    pairs = [(F(0), F(0)), *left, (v, F(1)), *right, (F(1), F(0))]
    return UnimodalMap.from_plmap(PLMap.from_pairs(pairs), v)


def random_plmap(rng, max_kinks: int = 5, max_den: int = 32) -> PLMap:
    """Random continuous PL map [0,1] -> [0,1]; flat pieces are allowed."""

    def value() -> Fraction:
        den = rng.randint(1, max_den)
        return F(rng.randint(0, den), den)

    xs = distinct_sorted(rng, rng.randint(0, max_kinks))
    pairs = [(F(0), value()), *((x, value()) for x in xs), (F(1), value())]
    return PLMap.from_pairs(pairs)


def conjugated_pair(h: PLMap, t: int) -> tuple[UnimodalMap, PLMap]:
    """A conjugated tent map and its t-lap commutator."""
    g = conjugate_map(tent(), h)
    return g, build_commutator(g, h, t)


def commutator_fixtures(ts=(1, 2, 3, 4, 5, 6), homeos=None):
    """(g, psi, t) triples covering the sawtooths on the tent map and their
    transported copies on conjugated maps."""
    out = [(tent(), xi(t), t) for t in ts]
    for h in SAMPLE_HOMEOS if homeos is None else homeos:
        g = conjugate_map(tent(), h)
        out.extend((g, build_commutator(g, h, t), t) for t in ts)
    return out


def xi_formula(t: int, x: Fraction) -> Fraction:
    """Independent sawtooth oracle: the closed integer/fractional-part form."""
    tx = t * x
    n = tx.numerator // tx.denominator
    frac_part = tx - n
    return F(1 - (-1) ** n, 2) + (-1) ** n * frac_part
