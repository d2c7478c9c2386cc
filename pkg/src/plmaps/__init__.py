"""Exact arithmetic for piecewise-linear self-maps of [0, 1]: unimodal maps,
sawtooth commutators of the tent map, zero pre-image grids, lap halving,
and piecewise-linear conjugacy detection."""

from .core import (
    PIECE_BUDGET,
    PLBranch,
    PLMap,
    Rational,
    as_rational,
    compose,
    format_rational,
    parse_rational,
)
from .errors import (
    DomainError,
    EmptyWindowError,
    FlatSegmentError,
    FormatError,
    MonotonicityError,
    ParameterError,
    ParityError,
    PieceBudgetError,
    PLError,
    PreconditionError,
    StructureError,
    ValidationError,
)
from .unimodal import (
    PreimageGrid,
    UnimodalMap,
    check_mu_identities,
    density_report,
    mu_grid,
    tent,
    xi,
)
from .commute import (
    BoundaryReport,
    CheckResult,
    Classification,
    LapDecomposition,
    boundary_checks,
    classify_triviality,
    commutes,
    halve,
    lap_decomposition,
    predicted_first_kink,
    reduce_fully,
)
from .conjugacy import (
    ConjugacyFit,
    PowerLawReport,
    build_commutator,
    conjugate_map,
    conjugate_plmap,
    dyadic_density_demo,
    fit_conjugacy,
    inverse_homeomorphism,
    power_law_check,
    slope_law_residual,
)
from . import fixtures, formats

__version__ = "0.1.0"

__all__ = [
    "PIECE_BUDGET",
    "PLBranch",
    "PLMap",
    "Rational",
    "as_rational",
    "compose",
    "format_rational",
    "parse_rational",
    "PLError",
    "DomainError",
    "EmptyWindowError",
    "FlatSegmentError",
    "FormatError",
    "MonotonicityError",
    "ParameterError",
    "ParityError",
    "PieceBudgetError",
    "PreconditionError",
    "StructureError",
    "ValidationError",
    "PreimageGrid",
    "UnimodalMap",
    "check_mu_identities",
    "density_report",
    "mu_grid",
    "tent",
    "xi",
    "BoundaryReport",
    "CheckResult",
    "Classification",
    "LapDecomposition",
    "boundary_checks",
    "classify_triviality",
    "commutes",
    "halve",
    "lap_decomposition",
    "predicted_first_kink",
    "reduce_fully",
    "ConjugacyFit",
    "PowerLawReport",
    "build_commutator",
    "conjugate_map",
    "conjugate_plmap",
    "dyadic_density_demo",
    "fit_conjugacy",
    "inverse_homeomorphism",
    "power_law_check",
    "slope_law_residual",
    "fixtures",
    "formats",
]
