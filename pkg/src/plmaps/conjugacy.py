"""Conjugacy construction, detection, and the slope and power laws.

An increasing piecewise-linear homeomorphism h of [0, 1] transports the
tent map to a conjugate unimodal map and the sawtooth family to that map's
commutators.  Conversely, matching zero pre-image grids point by point
recovers a candidate conjugacy as a piecewise-linear interpolant; if the
true conjugacy is piecewise linear, the interpolant stabilizes once all of
its kinks appear in the grid.
"""

from __future__ import annotations

import math
from bisect import insort
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .core import ONE, ZERO, PLMap, format_rational
from .errors import (
    EmptyWindowError,
    ParameterError,
    PreconditionError,
    ValidationError,
)
from .unimodal import UnimodalMap, _preimage_levels, tent, xi

__all__ = [
    "inverse_homeomorphism",
    "conjugate_plmap",
    "conjugate_map",
    "build_commutator",
    "ConjugacyFit",
    "fit_conjugacy",
    "slope_law_residual",
    "PowerLawReport",
    "power_law_check",
    "dyadic_density_demo",
]

#: Decimal digits used where the slope law is not algebraically exact.
RESIDUAL_DIGITS = 50


def _require_homeomorphism(h: PLMap) -> None:
    if h(ZERO) != ZERO or h(ONE) != ONE or any(s <= 0 for s in h.slopes):
        raise ValidationError(
            "conjugacy must fix 0 and 1 and be strictly increasing"
        )


def inverse_homeomorphism(h: PLMap) -> PLMap:
    """Exact inverse of an increasing piecewise-linear homeomorphism of [0, 1]."""
    _require_homeomorphism(h)
    return PLMap(h.inverse_branch(ZERO, ONE).points)


def conjugate_plmap(m: PLMap, h: PLMap) -> PLMap:
    """The transported map h o m o h^{-1}."""
    return h.compose(m).compose(inverse_homeomorphism(h))


def conjugate_map(g: UnimodalMap, h: PLMap) -> UnimodalMap:
    """Conjugate a unimodal map by h; the turning point moves to h(v)."""
    return UnimodalMap.from_plmap(conjugate_plmap(g, h), v=h(g.v))


def build_commutator(g: UnimodalMap, h: PLMap, t: int) -> PLMap:
    """The t-lap commutator of g = h o tent o h^{-1}: the transported
    t-lap sawtooth.  These exhaust the commutators of such maps."""
    if t < 1:
        raise ParameterError(f"lap count t must be >= 1, got {t}")
    if conjugate_map(tent(), h) != g:
        raise PreconditionError("g is not the h-conjugate of the tent map")
    return conjugate_plmap(xi(t), h)


def _interpolant(grid_points: tuple[Fraction, ...], depth: int) -> PLMap:
    denom = 2 ** (depth - 1)
    fit = PLMap.from_pairs(
        (Fraction(k, denom), y) for k, y in enumerate(grid_points)
    )
    _require_homeomorphism(fit)
    return fit


@dataclass(frozen=True)
class ConjugacyFit:
    """Candidate conjugacy from the tent map, interpolated through matched
    grid points.  ``stabilized`` records whether refining the grid by one
    level left the canonical interpolant unchanged; ``alpha`` approximates
    the base-2 logarithm of g'(0) and ``omega`` the leading coefficient of
    the power-law profile near 0."""

    depth: int
    interpolant: PLMap
    stabilized: bool
    omega: float | None
    alpha: float


def _power_window(g: UnimodalMap, depth: int) -> list[Fraction]:
    """Dyadic sample abscissas in (0, first_kink(g)/2]."""
    cutoff = g.first_kink() / 2
    denom = 2 ** (depth - 1)
    return [
        Fraction(k, denom) for k in range(1, denom + 1) if Fraction(k, denom) <= cutoff
    ]


def fit_conjugacy(g: UnimodalMap, depth: int) -> ConjugacyFit:
    """Fit a piecewise-linear conjugacy candidate at the given grid depth.

    The interpolant passes through every (tent grid point, g grid point)
    pair exactly.  If g is conjugate to the tent map by a piecewise-linear
    h whose kinks all have pre-images in the depth-(depth-1) grid, the
    interpolant equals h and stabilizes.
    """
    if depth < 2:
        raise ValidationError(f"fit depth must be >= 2, got {depth}")
    levels = list(_preimage_levels(g, depth))
    previous = _interpolant(levels[-2], depth - 1)
    fit = _interpolant(levels[-1], depth)
    alpha = math.log2(g.slope_at_zero())
    window = _power_window(g, depth)
    omega = None
    if window:
        x = window[0]
        omega = float(fit(x)) / float(x) ** alpha
    return ConjugacyFit(depth, fit, previous == fit, omega, alpha)


def slope_law_residual(g: UnimodalMap, psi: PLMap, t: int) -> float:
    """Deviation of psi'(0) from g'(0) raised to log2(t).

    Exactly zero (shortcut, no rounding) when the law is algebraic: t a
    power of two, or g'(0) = 2 forcing psi'(0) = t.  Otherwise the residual
    of the logarithmic form is computed with RESIDUAL_DIGITS digits.
    """
    if t < 1:
        raise ParameterError(f"lap count t must be >= 1, got {t}")
    if psi.laps() != t:
        raise PreconditionError(f"psi has {psi.laps()} laps, expected t = {t}")
    g0 = g.slope_at_zero()
    p0 = psi.slope_at_zero()
    if p0 <= 0:
        raise PreconditionError("psi must increase at 0")
    if t & (t - 1) == 0 and p0 == g0 ** (t.bit_length() - 1):
        return 0.0
    if g0 == 2 and p0 == t:
        return 0.0
    with localcontext() as ctx:
        ctx.prec = RESIDUAL_DIGITS
        ln_g = (Decimal(g0.numerator) / Decimal(g0.denominator)).ln()
        ln_p = (Decimal(p0.numerator) / Decimal(p0.denominator)).ln()
        log2_t = Decimal(t).ln() / Decimal(2).ln()
        return float(abs(ln_p - log2_t * ln_g))


@dataclass(frozen=True)
class PowerLawReport:
    """Spread of the power-law coefficient over grid points below the first
    kink.  Gated on a stabilized fit; ``applicable`` is False otherwise."""

    applicable: bool
    depth: int
    alpha: float | None = None
    omega: float | None = None
    max_relative_spread: float | None = None
    within_tolerance: bool | None = None
    window: tuple[Fraction, Fraction] | None = None
    count: int = 0
    reason: str | None = None

    def to_dict(self) -> dict:
        out: dict = {"applicable": self.applicable, "depth": self.depth}
        if not self.applicable:
            out["reason"] = self.reason
            return out
        out.update(
            alpha=self.alpha,
            omega=self.omega,
            max_relative_spread=self.max_relative_spread,
            within_tolerance=self.within_tolerance,
            window=[format_rational(self.window[0]), format_rational(self.window[1])],
            count=self.count,
        )
        return out


def power_law_check(g: UnimodalMap, depth: int, tolerance: float = 1e-9) -> PowerLawReport:
    """Check how well the fitted conjugacy follows omega * x**alpha near 0.

    The coefficient is sampled at every grid abscissa in (0, first_kink(g)/2]
    and the maximum relative spread is compared against the tolerance; exact
    inputs make the spread vanish up to float formatting.
    """
    if depth < 3:
        raise ValidationError(f"power-law check needs depth >= 3, got {depth}")
    if tolerance <= 0:
        raise ParameterError(f"tolerance must be positive, got {tolerance}")
    fit = fit_conjugacy(g, depth)
    if not fit.stabilized:
        return PowerLawReport(
            False, depth, reason="no stabilized piecewise-linear fit at this depth"
        )
    window = _power_window(g, depth)
    if not window:
        raise EmptyWindowError("no grid points below half the first kink")
    omegas = [float(fit.interpolant(x)) / float(x) ** fit.alpha for x in window]
    spread = (max(omegas) - min(omegas)) / min(omegas)
    return PowerLawReport(
        True,
        depth,
        alpha=fit.alpha,
        omega=omegas[0],
        max_relative_spread=spread,
        within_tolerance=spread <= tolerance,
        window=(window[0], window[-1]),
        count=len(window),
    )


def dyadic_density_demo(k: int, n: int, t: int, pmax: int) -> list[Fraction]:
    """Fold k * t^p into the dyadic window [1/2^n, 1/2^(n-1)) for p = 1..pmax
    and report the running maximum gap (window edges included).

    The gap sequence is non-increasing; for t not a power of two it decays,
    mirroring density of an irrational rotation orbit.
    """
    if k < 1 or n < 1 or pmax < 1:
        raise ParameterError("k, n and pmax must all be >= 1")
    if t < 1 or t & (t - 1) == 0:
        raise ParameterError(f"t = {t} is a power of two: the folded orbit is finite")
    lo = Fraction(1, 2 ** n)
    hi = Fraction(1, 2 ** (n - 1))
    pts: list[Fraction] = []
    seen: set[Fraction] = set()
    gaps: list[Fraction] = []
    value = k
    for _ in range(pmax):
        value *= t
        folded = Fraction(value, 2 ** (n + value.bit_length() - 1))
        if folded not in seen:
            seen.add(folded)
            insort(pts, folded)
        walk = [lo, *pts, hi]
        gaps.append(max(b - a for a, b in zip(walk, walk[1:])))
    return gaps
