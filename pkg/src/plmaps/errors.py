"""Exception taxonomy shared by all plmaps modules."""


class PLError(Exception):
    """Base class for every error raised by this package."""


class DomainError(PLError):
    """An argument lies outside the domain of the map being evaluated."""


class ValidationError(PLError):
    """A value violates a structural invariant of its type."""


class FormatError(ValidationError):
    """A serialized document is malformed; the message carries a
    line or field diagnostic."""


class PieceBudgetError(PLError):
    """An operation would produce more breakpoints than the configured cap."""


class FlatSegmentError(PLError):
    """A zero-slope piece makes the requested quantity ill-defined
    (lap counting, or point pre-images at the flat level)."""


class MonotonicityError(PLError):
    """The map is not strictly monotone on the requested interval."""


class StructureError(PLError):
    """A map does not have the combinatorial structure the operation
    requires (missing kink, non-alternating laps, discontinuous assembly)."""


class ParityError(StructureError):
    """Lap halving was asked for on a map with an odd lap count."""


class PreconditionError(PLError):
    """A documented operation precondition does not hold for the inputs."""


class ParameterError(PLError):
    """A scalar parameter is outside the accepted range."""


class EmptyWindowError(PLError):
    """No sample points fall inside the checking window."""
