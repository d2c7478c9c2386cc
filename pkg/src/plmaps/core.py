"""Exact algebra of continuous piecewise-linear maps on the unit interval.

Every scalar is a ``fractions.Fraction``; no floating point enters any
computation here.  A map is stored as its canonical breakpoint list:
abscissas strictly increasing, no interior breakpoint collinear with its
neighbours, all values inside [0, 1].  Equality of canonical breakpoint
lists therefore coincides with pointwise equality of the functions.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from .errors import (
    DomainError,
    FlatSegmentError,
    MonotonicityError,
    PieceBudgetError,
    StructureError,
    ValidationError,
)

#: The exact scalar type of the whole package.
Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

#: Hard cap on breakpoints of any produced map.  Iteration doubles the lap
#: count per step, so runaway requests fail loudly instead of thrashing.
PIECE_BUDGET = 1 << 20

Point = tuple[Fraction, Fraction]


def as_rational(value: object, where: str = "value") -> Fraction:
    """Coerce ints, rational strings and Fractions; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value, where)
    raise ValidationError(
        f"{where}: expected an exact rational, got {type(value).__name__}"
    )


def parse_rational(text: str, where: str = "value") -> Fraction:
    """Parse "p/q" or integer string "p" into a Fraction."""
    body = text.strip()
    num, sep, den = body.partition("/")
    try:
        if not sep:
            return Fraction(int(num))
        d = int(den)
        if d <= 0:
            raise ValidationError(f"{where}: denominator must be positive in {text!r}")
        return Fraction(int(num), d)
    except ValueError:
        raise ValidationError(f"{where}: invalid rational literal {text!r}") from None


def format_rational(q: Fraction) -> str:
    """Serialize a Fraction as "p/q", or "p" for integers."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _collinear(a: Point, b: Point, c: Point) -> bool:
    return (b[1] - a[1]) * (c[0] - b[0]) == (c[1] - b[1]) * (b[0] - a[0])


def _canonicalize(pairs: Iterable[tuple[object, object]]) -> tuple[Point, ...]:
    """Sort, drop repeated points, reject conflicting duplicates, and remove
    collinear interior breakpoints."""
    pts = sorted((as_rational(x, "x"), as_rational(y, "y")) for x, y in pairs)
    if len(pts) < 2:
        raise ValidationError("a piecewise-linear map needs at least two breakpoints")
    dedup: list[Point] = [pts[0]]
    for p in pts[1:]:
        if p == dedup[-1]:
            continue
        if p[0] == dedup[-1][0]:
            raise ValidationError(
                f"conflicting values {format_rational(dedup[-1][1])} and "
                f"{format_rational(p[1])} at x = {format_rational(p[0])}"
            )
        dedup.append(p)
    out: list[Point] = []
    for p in dedup:
        while len(out) >= 2 and _collinear(out[-2], out[-1], p):
            out.pop()
        out.append(p)
    if len(out) < 2:
        raise ValidationError("a piecewise-linear map needs at least two breakpoints")
    return tuple(out)


@dataclass(frozen=True, eq=False)
class PLBranch:
    """A continuous piecewise-linear function on a closed subinterval of
    [0, 1], with values in [0, 1], in canonical breakpoint form.

    Instances are immutable values; all operations are pure and may be
    shared freely across threads.
    """

    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        pts = tuple((as_rational(x, "x"), as_rational(y, "y")) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) < 2:
            raise ValidationError("a piecewise-linear map needs at least two breakpoints")
        for i, (x, y) in enumerate(pts):
            if not (ZERO <= x <= ONE):
                raise ValidationError(f"breakpoint {i}: x = {format_rational(x)} outside [0, 1]")
            if not (ZERO <= y <= ONE):
                raise ValidationError(f"breakpoint {i}: y = {format_rational(y)} outside [0, 1]")
            if i and x <= pts[i - 1][0]:
                raise ValidationError(
                    f"breakpoint {i}: abscissas must be strictly increasing"
                )
        for i in range(1, len(pts) - 1):
            if _collinear(pts[i - 1], pts[i], pts[i + 1]):
                raise ValidationError(
                    f"breakpoint {i}: collinear with neighbours (non-canonical)"
                )

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[object, object]]) -> "PLBranch":
        """Forgiving constructor: sorts the pairs and canonicalizes."""
        return cls(_canonicalize(pairs))

    # -- basic geometry -------------------------------------------------

    @cached_property
    def xs(self) -> tuple[Fraction, ...]:
        return tuple(p[0] for p in self.points)

    @cached_property
    def ys(self) -> tuple[Fraction, ...]:
        return tuple(p[1] for p in self.points)

    @cached_property
    def slopes(self) -> tuple[Fraction, ...]:
        pts = self.points
        return tuple(
            (pts[i + 1][1] - pts[i][1]) / (pts[i + 1][0] - pts[i][0])
            for i in range(len(pts) - 1)
        )

    @property
    def domain(self) -> tuple[Fraction, Fraction]:
        return self.points[0][0], self.points[-1][0]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PLBranch):
            return self.points == other.points
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        body = ", ".join(
            f"({format_rational(x)}, {format_rational(y)})" for x, y in self.points
        )
        return f"{type(self).__name__}[{body}]"

    # -- evaluation ------------------------------------------------------

    def __call__(self, x: object) -> Fraction:
        """Exact value at ``x`` by linear interpolation."""
        q = as_rational(x, "x")
        lo, hi = self.domain
        if not (lo <= q <= hi):
            raise DomainError(
                f"x = {format_rational(q)} outside domain "
                f"[{format_rational(lo)}, {format_rational(hi)}]"
            )
        i = bisect.bisect_right(self.xs, q) - 1
        if i == len(self.points) - 1:
            return self.points[-1][1]
        (x0, y0), (x1, y1) = self.points[i], self.points[i + 1]
        return y0 + (y1 - y0) * (q - x0) / (x1 - x0)

    # -- structure queries -----------------------------------------------

    def is_constant(self) -> bool:
        return all(y == self.points[0][1] for _, y in self.points)

    def laps(self) -> int:
        """Number of maximal intervals of strict monotonicity."""
        signs = []
        for s in self.slopes:
            if s == 0:
                raise FlatSegmentError("lap structure undefined: zero-slope piece")
            signs.append(s > 0)
        return 1 + sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def first_kink(self) -> Fraction:
        """Smallest interior breakpoint abscissa."""
        if len(self.points) < 3:
            raise StructureError("globally linear map has no kink")
        return self.points[1][0]

    def slope_at_zero(self) -> Fraction:
        """Slope of the first linear piece."""
        return self.slopes[0]

    def preimage(self, y: object) -> tuple[Fraction, ...]:
        """Exact sorted solution set of self(x) = y."""
        q = as_rational(y, "y")
        if not (ZERO <= q <= ONE):
            raise DomainError(f"level y = {format_rational(q)} outside [0, 1]")
        hits: set[Fraction] = set()
        pts = self.points
        for i in range(len(pts) - 1):
            (x0, y0), (x1, y1) = pts[i], pts[i + 1]
            if y0 == y1:
                if q == y0:
                    raise FlatSegmentError(
                        f"pre-image of {format_rational(q)} is an interval: flat piece "
                        f"[{format_rational(x0)}, {format_rational(x1)}]"
                    )
                continue
            if min(y0, y1) <= q <= max(y0, y1):
                hits.add(x0 + (q - y0) * (x1 - x0) / (y1 - y0))
        return tuple(sorted(hits))

    # -- producers ---------------------------------------------------------

    def restrict(self, lo: object, hi: object) -> "PLBranch":
        """Restriction to [lo, hi], with interpolated endpoint breakpoints."""
        a = as_rational(lo, "lo")
        b = as_rational(hi, "hi")
        d0, d1 = self.domain
        if not (d0 <= a < b <= d1):
            raise DomainError(
                f"[{format_rational(a)}, {format_rational(b)}] is not a subinterval "
                f"of [{format_rational(d0)}, {format_rational(d1)}]"
            )
        inner = [p for p in self.points if a < p[0] < b]
        pairs = [(a, self(a))] + inner + [(b, self(b))]
        return PLBranch(_canonicalize(pairs))

    def inverse_branch(self, lo: object, hi: object) -> "PLBranch":
        """Exact inverse of the restriction to [lo, hi]; the map must be
        strictly monotone there.  Defined on the image interval."""
        seg = self.restrict(lo, hi)
        rising = all(s > 0 for s in seg.slopes)
        falling = all(s < 0 for s in seg.slopes)
        if not (rising or falling):
            raise MonotonicityError(
                f"not strictly monotone on [{format_rational(seg.points[0][0])}, "
                f"{format_rational(seg.points[-1][0])}]"
            )
        swapped = [(y, x) for x, y in seg.points]
        if falling:
            swapped.reverse()
        return PLBranch(tuple(swapped))

    def compose(self, inner: "PLBranch") -> "PLBranch":
        """The map x -> self(inner(x)), exactly.

        Breakpoints are inner's breakpoints plus the inner pre-images of
        self's breakpoints, canonicalized afterwards.
        """
        lo, hi = self.domain
        cands: set[Fraction] = set(inner.xs)
        interior_levels = self.xs[1:-1]
        pts = inner.points
        for i in range(len(pts) - 1):
            (x0, y0), (x1, y1) = pts[i], pts[i + 1]
            if not (lo <= y0 <= hi and lo <= y1 <= hi):
                raise DomainError(
                    "inner map values leave the outer map's domain "
                    f"on [{format_rational(x0)}, {format_rational(x1)}]"
                )
            if y0 == y1:
                continue
            for c in interior_levels:
                if min(y0, y1) <= c <= max(y0, y1):
                    cands.add(x0 + (c - y0) * (x1 - x0) / (y1 - y0))
        if len(cands) > PIECE_BUDGET:
            raise PieceBudgetError(
                f"composition needs {len(cands)} breakpoints; budget is {PIECE_BUDGET}"
            )
        xs = sorted(cands)
        return PLBranch(_canonicalize((x, self(inner(x))) for x in xs))


@dataclass(frozen=True, eq=False)
class PLMap(PLBranch):
    """A continuous piecewise-linear self-map of [0, 1]: a :class:`PLBranch`
    whose domain is exactly [0, 1]."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.points[0][0] != ZERO or self.points[-1][0] != ONE:
            raise ValidationError("domain must be exactly [0, 1]")

    @classmethod
    def identity(cls) -> "PLMap":
        return cls(((ZERO, ZERO), (ONE, ONE)))

    @classmethod
    def constant(cls, c: object) -> "PLMap":
        q = as_rational(c, "c")
        return cls(((ZERO, q), (ONE, q)))

    def compose(self, inner: "PLMap") -> "PLMap":
        return PLMap(super().compose(inner).points)

    def iterate(self, n: int) -> "PLMap":
        """n-fold composition of the map with itself, n >= 1."""
        if n < 1:
            raise ValidationError(f"iteration count must be >= 1, got {n}")
        out = self
        for _ in range(n - 1):
            out = out.compose(self)
        return out


def compose(outer: PLBranch, inner: PLBranch) -> PLBranch:
    """Function form of :meth:`PLBranch.compose`: outer after inner."""
    return outer.compose(inner)
