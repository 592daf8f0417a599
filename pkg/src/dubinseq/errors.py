"""Exception types shared across the package."""


class DubinseqError(Exception):
    """Base class for all errors raised by this package."""


class SeparationViolation(DubinseqError):
    """Two waypoints are closer than twice the turning radius."""


class DiscontinuityError(DubinseqError):
    """Paths handed to concatenate() do not join continuously."""


class InfeasibleHeading(DubinseqError):
    """A side-constrained construction has no valid tangent geometry.

    This signals an internal inconsistency: with the 2*rho separation
    precondition satisfied, every heading admits a valid construction.
    """


class ParseError(DubinseqError):
    """A document is structurally malformed."""


class ValidationError(DubinseqError):
    """A structurally valid document violates an instance invariant."""


class GenerationStalled(DubinseqError):
    """Rejection sampling failed to place a point within the retry budget."""
