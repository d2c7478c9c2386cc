"""Bundled example maps, including the non-conjugate witness.

The attracting example has an interior left-branch segment of slope 1/2
crossing the diagonal, so a whole interval around the fixed point never
reaches 0 under iteration.  Its zero pre-image grids therefore keep a gap
of at least the trapped interval's length at every depth, in contrast with
maps conjugate to the tent map.
"""

from __future__ import annotations

from fractions import Fraction

from .core import PLBranch, ZERO
from .errors import ValidationError
from .unimodal import UnimodalMap

__all__ = [
    "attracting_example",
    "TRAPPED_INTERVAL",
    "is_invariant_interval",
    "wandering_gap_bound",
]

#: Interval mapped into itself by the attracting example; contains its
#: slope-1/2 fixed point 3/8 and avoids 0.
TRAPPED_INTERVAL = (Fraction(1, 4), Fraction(7, 16))


def attracting_example() -> UnimodalMap:
    """Unimodal map with an attracting interior fixed point at 3/8."""
    return UnimodalMap(
        (
            (Fraction(0), Fraction(0)),
            (Fraction(1, 8), Fraction(1, 4)),
            (Fraction(1, 2), Fraction(7, 16)),
            (Fraction(5, 8), Fraction(1)),
            (Fraction(1), Fraction(0)),
        ),
        Fraction(5, 8),
    )


def is_invariant_interval(g: UnimodalMap, lo: Fraction, hi: Fraction) -> bool:
    """Exact check that g maps [lo, hi] into [lo, hi].

    The image extremes of a piecewise-linear map are attained at breakpoints,
    so checking the restriction's breakpoint values suffices.
    """
    seg: PLBranch = g.restrict(lo, hi)
    return all(lo <= y <= hi for y in seg.ys)


def wandering_gap_bound(g: UnimodalMap, lo: Fraction, hi: Fraction) -> Fraction:
    """Lower bound on every depth's maximum grid gap, from a trapped interval.

    If g maps [lo, hi] into itself and 0 < lo, no point of (lo, hi) ever
    reaches 0, so no pre-image grid point falls inside and consecutive grid
    points must straddle the interval.
    """
    if not ZERO < lo < hi:
        raise ValidationError("need 0 < lo < hi for a zero-avoiding trap")
    if not is_invariant_interval(g, lo, hi):
        raise ValidationError(
            "interval is not mapped into itself; no trapping argument applies"
        )
    return hi - lo
