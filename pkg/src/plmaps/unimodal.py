"""Unimodal maps, the tent map, the sawtooth family, and zero pre-image grids.

A unimodal map rises strictly from 0 at x = 0 to 1 at its turning point v,
then falls strictly back to 0 at x = 1.  The depth-n pre-image grid collects
the solutions of g^n(x) = 0; it is computed level by level, never through
the exponentially large n-fold composition.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .core import ONE, PIECE_BUDGET, ZERO, PLBranch, PLMap, as_rational, format_rational
from .errors import ValidationError

__all__ = [
    "UnimodalMap",
    "PreimageGrid",
    "tent",
    "xi",
    "mu_grid",
    "density_report",
    "check_mu_identities",
]


@dataclass(frozen=True, eq=False)
class UnimodalMap(PLMap):
    """A validated unimodal self-map of [0, 1] with turning point ``v``:
    strictly increasing on [0, v], strictly decreasing on [v, 1], and
    g(0) = g(1) = 0, g(v) = 1."""

    v: Fraction

    def __post_init__(self) -> None:
        super().__post_init__()
        object.__setattr__(self, "v", as_rational(self.v, "v"))
        if not (ZERO < self.v < ONE):
            raise ValidationError(f"turning point v = {format_rational(self.v)} not in (0, 1)")
        if self.v not in self.xs:
            raise ValidationError(
                f"turning point v = {format_rational(self.v)} is not a breakpoint"
            )
        if self.points[0][1] != ZERO or self.points[-1][1] != ZERO:
            raise ValidationError("endpoint values must both be 0")
        if self(self.v) != ONE:
            raise ValidationError("the value at the turning point must be 1")
        k = self.xs.index(self.v)
        if any(s <= 0 for s in self.slopes[:k]) or any(s >= 0 for s in self.slopes[k:]):
            raise ValidationError(
                "map must increase strictly before v and decrease strictly after"
            )

    @classmethod
    def from_plmap(cls, m: PLMap, v: object | None = None) -> "UnimodalMap":
        """Validate a plain map as unimodal.  With ``v`` omitted the turning
        point is inferred as the unique breakpoint of value 1."""
        if v is None:
            peaks = [x for x, y in m.points if y == ONE]
            if len(peaks) != 1:
                raise ValidationError(
                    f"expected exactly one breakpoint with value 1, found {len(peaks)}"
                )
            v = peaks[0]
        return cls(m.points, as_rational(v, "v"))

    # Branch accessors; each lap maps onto [0, 1], so both inverses are
    # total on [0, 1].

    def left_branch(self) -> PLBranch:
        return self.restrict(ZERO, self.v)

    def right_branch(self) -> PLBranch:
        return self.restrict(self.v, ONE)

    def left_inverse(self) -> PLBranch:
        return self.inverse_branch(ZERO, self.v)

    def right_inverse(self) -> PLBranch:
        return self.inverse_branch(self.v, ONE)


def tent() -> UnimodalMap:
    """The tent map x -> 1 - |1 - 2x|."""
    return UnimodalMap(
        ((ZERO, ZERO), (Fraction(1, 2), ONE), (ONE, ZERO)), Fraction(1, 2)
    )


def xi(t: int) -> PLMap:
    """The t-lap unit sawtooth: slopes alternate +t, -t starting at the
    origin, with every kink on the lines y = 0 or y = 1.

    xi(1) is the identity and xi(2) is the tent map; each xi(t) commutes
    with the tent map exactly.
    """
    if t < 1:
        raise ValidationError(f"sawtooth index must be >= 1, got {t}")
    return PLMap(tuple((Fraction(k, t), Fraction(k % 2)) for k in range(t + 1)))


@dataclass(frozen=True)
class PreimageGrid:
    """Sorted exact solutions of g^depth(x) = 0 for a unimodal g.

    The grid always starts at 0, ends at 1, and has 2^(depth-1) + 1 points;
    refining by one level keeps every point and doubles the index.
    """

    depth: int
    points: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        expected = 2 ** (self.depth - 1) + 1
        if len(self.points) != expected:
            raise ValidationError(
                f"depth-{self.depth} grid must have {expected} points, "
                f"got {len(self.points)}"
            )
        if self.points[0] != ZERO or self.points[-1] != ONE:
            raise ValidationError("grid must start at 0 and end at 1")
        if any(a >= b for a, b in zip(self.points, self.points[1:])):
            raise ValidationError("grid points must be strictly increasing")


def _preimage_levels(g: UnimodalMap, depth: int, threads: int = 1):
    """Yield the sorted point tuple of each level 1..depth in turn."""
    if depth < 1:
        raise ValidationError(f"depth must be >= 1, got {depth}")
    if 2 ** (depth - 1) + 1 > PIECE_BUDGET:
        raise ValidationError(f"depth {depth} exceeds the piece budget")
    level: tuple[Fraction, ...] = (ZERO, ONE)
    yield level
    for _ in range(depth - 1):
        acc: set[Fraction] = set()
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                for sols in pool.map(g.preimage, level):
                    acc.update(sols)
        else:
            for y in level:
                acc.update(g.preimage(y))
        level = tuple(sorted(acc))
        yield level


def mu_grid(g: UnimodalMap, n: int, threads: int = 1) -> PreimageGrid:
    """Depth-n zero pre-image grid of g, built by level-wise pre-images."""
    for level in _preimage_levels(g, n, threads):
        pass
    return PreimageGrid(n, level)


def density_report(g: UnimodalMap, depth: int, threads: int = 1) -> list[Fraction]:
    """Maximum gap between consecutive depth-n grid points, for each n <= depth.

    The sequence is finite-depth evidence about density of the complete
    pre-image of 0; it never constitutes a verdict.  Because the grids are
    nested, the sequence is non-increasing.
    """
    gaps = []
    for level in _preimage_levels(g, depth, threads):
        gaps.append(max(b - a for a, b in zip(level, level[1:])))
    return gaps


def check_mu_identities(g: UnimodalMap, n: int) -> bool:
    """Exact check of the three grid identity families at depth n >= 2:
    g maps the depth-n point of index k to the depth-(n-1) point of index k;
    points symmetric about the middle index have equal images; and the
    depth-(n-1) grid embeds in the depth-n grid at even indices."""
    if n < 2:
        raise ValidationError(f"identity check needs n >= 2, got {n}")
    levels = list(_preimage_levels(g, n))
    prev, cur = levels[-2], levels[-1]
    half = 2 ** (n - 2)
    for k in range(half + 1):
        image = g(cur[k])
        if image != prev[k]:
            return False
        if image != g(cur[2 * half - k]):
            return False
        if prev[k] != cur[2 * k]:
            return False
    return True
