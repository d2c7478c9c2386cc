"""Commutation checking and the lap-halving reduction.

A commutator of a unimodal map g is a map psi with psi o g = g o psi.
Non-constant commutators decompose into laps bounded by the points where
psi hits {0, 1}; each lap maps onto [0, 1] and is split by the unique
pre-image of the turning point.  Halving composes each lap with the
matching inverse branch of g, producing a commutator with half the laps
that g maps back onto the original.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import ONE, ZERO, PLMap, format_rational
from .errors import ParityError, PreconditionError, StructureError
from .unimodal import UnimodalMap

__all__ = [
    "commutes",
    "Classification",
    "classify_triviality",
    "CheckResult",
    "BoundaryReport",
    "boundary_checks",
    "LapDecomposition",
    "lap_decomposition",
    "halve",
    "reduce_fully",
    "predicted_first_kink",
]


def commutes(g: UnimodalMap, psi: PLMap) -> bool:
    """Exact test of psi o g = g o psi."""
    return psi.compose(g) == g.compose(psi)


@dataclass(frozen=True)
class Classification:
    """Verdict on a commutator: a constant map, the ``power``-th iterate of
    g (power 0 meaning the identity), or genuinely non-trivial."""

    kind: str  # "constant" | "iterate" | "nontrivial"
    power: int | None = None
    value: Fraction | None = None

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.power is not None:
            out["power"] = self.power
        if self.value is not None:
            out["value"] = format_rational(self.value)
        return out


def classify_triviality(g: UnimodalMap, psi: PLMap) -> Classification:
    """Classify a commutator of g as constant, an iterate of g, or neither.

    Only one candidate iterate exists: the lap count of the m-th iterate is
    2^m, so the comparison is finite and exact.
    """
    if not commutes(g, psi):
        raise PreconditionError("psi does not commute with g")
    if psi.is_constant():
        return Classification("constant", value=psi.points[0][1])
    n = psi.laps()
    if n == 1:
        if psi == PLMap.identity():
            return Classification("iterate", power=0)
        return Classification("nontrivial")
    if n & (n - 1) == 0:
        m = n.bit_length() - 1
        if psi == g.iterate(m):
            return Classification("iterate", power=m)
    return Classification("nontrivial")


@dataclass(frozen=True)
class LapDecomposition:
    """Lap endpoints of a non-constant commutator (where it hits {0, 1}),
    the per-lap pre-image of the turning point, and the lap count."""

    endpoints: tuple[Fraction, ...]
    splits: tuple[Fraction, ...]
    lapcount: int


def _require_commutator(g: UnimodalMap, psi: PLMap) -> None:
    if not commutes(g, psi):
        raise PreconditionError("psi does not commute with g")
    if psi.is_constant():
        raise PreconditionError("psi must be non-constant")


def lap_decomposition(g: UnimodalMap, psi: PLMap) -> LapDecomposition:
    """Decompose a non-constant commutator into its laps.

    Raises StructureError if the 0/1 hits do not alternate or do not bound
    exactly the monotone pieces; either signals a non-commutator input.
    """
    _require_commutator(g, psi)
    endpoints = tuple(sorted(set(psi.preimage(ZERO)) | set(psi.preimage(ONE))))
    if endpoints[0] != ZERO or endpoints[-1] != ONE:
        raise StructureError("laps must start at 0 and end at 1")
    values = [psi(e) for e in endpoints]
    for i, (a, b) in enumerate(zip(values, values[1:])):
        if a == b:
            raise StructureError(
                f"consecutive {format_rational(a)}-hits at "
                f"x = {format_rational(endpoints[i + 1])}: laps not alternating"
            )
    lapcount = len(endpoints) - 1
    if psi.laps() != lapcount:
        raise StructureError(
            f"{psi.laps()} monotone pieces but {lapcount} alternating laps"
        )
    splits = []
    for a, b in zip(endpoints, endpoints[1:]):
        inside = psi.restrict(a, b).preimage(g.v)
        if len(inside) != 1 or not (a < inside[0] < b):
            raise StructureError(
                f"lap [{format_rational(a)}, {format_rational(b)}] must cross the "
                "turning level exactly once"
            )
        splits.append(inside[0])
    return LapDecomposition(endpoints, tuple(splits), lapcount)


@dataclass(frozen=True)
class CheckResult:
    name: str
    identity: str
    passed: bool
    witness: Fraction | None = None

    def to_dict(self) -> dict:
        out: dict = {"name": self.name, "identity": self.identity, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = format_rational(self.witness)
        return out


@dataclass(frozen=True)
class BoundaryReport:
    """Outcome of the boundary-behaviour checks of a commutator."""

    checks: tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "all_passed": self.all_passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def boundary_checks(g: UnimodalMap, psi: PLMap) -> BoundaryReport:
    """Verify the forced boundary behaviour of a non-constant commutator:
    it fixes 0, sends 1 into {0, 1}, maps every lap onto [0, 1], and takes
    the turning point to the value dictated by its lap-count parity.

    Any failure indicates an implementation bug rather than a mathematical
    possibility, which is why the checks exist.
    """
    _require_commutator(g, psi)
    checks = []

    checks.append(
        CheckResult("origin_fixed", "psi(0) = 0", psi(ZERO) == ZERO, witness=ZERO)
    )
    checks.append(
        CheckResult(
            "right_endpoint_binary",
            "psi(1) in {0, 1}",
            psi(ONE) in (ZERO, ONE),
            witness=ONE,
        )
    )

    try:
        dec = lap_decomposition(g, psi)
        bad = next(
            (
                a
                for a, b in zip(dec.endpoints, dec.endpoints[1:])
                if {psi(a), psi(b)} != {ZERO, ONE}
            ),
            None,
        )
        checks.append(
            CheckResult(
                "laps_onto_unit",
                f"each of the {dec.lapcount} laps maps onto [0, 1]",
                bad is None,
                witness=bad,
            )
        )
        lapcount = dec.lapcount
    except StructureError:
        checks.append(
            CheckResult("laps_onto_unit", "each lap maps onto [0, 1]", False)
        )
        lapcount = None

    if lapcount is not None:
        got = psi(g.v)
        if lapcount % 2 == 1:
            expected, identity = g.v, "psi(v) = v (odd lap count)"
        elif (lapcount // 2) % 2 == 1:
            expected, identity = ONE, "psi(v) = 1 (lap count 2t, t odd)"
        else:
            expected, identity = ZERO, "psi(v) = 0 (lap count 2t, t even)"
        checks.append(
            CheckResult("turning_value", identity, got == expected, witness=g.v)
        )

    return BoundaryReport(tuple(checks))


#: Inverse-branch selector for halving, indexed by lap number mod 4:
#: the increasing branch of g on laps 0 and 3, the decreasing branch on 1 and 2.
_BRANCH_PATTERN = ("left", "right", "right", "left")


def halve(g: UnimodalMap, psi: PLMap) -> PLMap:
    """Produce the commutator with half the laps of psi.

    On each lap the matching inverse branch of g is composed with the lap
    restriction; the pattern of branches makes consecutive pieces meet, so
    g o result = psi exactly and the result commutes with g.  Continuity of
    the assembly is asserted, not assumed.
    """
    dec = lap_decomposition(g, psi)
    if dec.lapcount % 2 == 1:
        raise ParityError(f"lap count {dec.lapcount} is odd; halving needs it even")
    inverses = {"left": g.left_inverse(), "right": g.right_inverse()}
    assembled: list[tuple[Fraction, Fraction]] = []
    for j in range(dec.lapcount):
        seg = psi.restrict(dec.endpoints[j], dec.endpoints[j + 1])
        piece = inverses[_BRANCH_PATTERN[j % 4]].compose(seg)
        if j == 0:
            assembled.extend(piece.points)
            continue
        if piece.points[0] != assembled[-1]:
            raise StructureError(
                f"assembled halving is discontinuous at "
                f"x = {format_rational(piece.points[0][0])}"
            )
        assembled.extend(piece.points[1:])
    return PLMap.from_pairs(assembled)


def reduce_fully(g: UnimodalMap, psi: PLMap) -> PLMap:
    """Apply halving while the lap count is even; returns the odd-lap
    generator (psi itself when its lap count is already odd)."""
    _require_commutator(g, psi)
    out = psi
    while out.laps() % 2 == 0:
        out = halve(g, out)
    return out


def predicted_first_kink(g: UnimodalMap, psi: PLMap) -> Fraction:
    """First positive kink a genuine commutator must have: the first kink
    of g scaled by g'(0)/psi'(0).  Requires psi'(0) > g'(0)."""
    a = g.first_kink()
    g0 = g.slope_at_zero()
    p0 = psi.slope_at_zero()
    if p0 <= g0:
        raise PreconditionError(
            f"slope at 0 of psi ({format_rational(p0)}) must exceed that of g "
            f"({format_rational(g0)})"
        )
    return a * g0 / p0
