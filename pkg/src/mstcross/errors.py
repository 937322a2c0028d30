"""Exception types shared across the library."""


class MstCrossError(Exception):
    """Base class for all library-specific errors."""


class DegenerateIntersection(MstCrossError):
    """Segment pair touches: endpoint on interior, or collinear overlap."""


class NonGenericInput(MstCrossError):
    """Operation requires a generic point set but found a tie or witness."""


class EmptyColorClass(MstCrossError):
    """A coloring left Red or Blue empty where both are required."""


class CapExceeded(MstCrossError):
    """Enumeration grew past the configured cap."""


class TooLarge(MstCrossError):
    """Input size exceeds the exhaustive-search limit."""


class TooFewPoints(MstCrossError):
    """Construction needs more points than were supplied."""


class NotConvexPosition(MstCrossError):
    """Input must be in strictly convex position."""


class NotFlat(MstCrossError):
    """Convex set is not flat (y-spread must stay below minimum x-gap)."""


class NotLabeledGrid(MstCrossError):
    """Operation needs row labels identifying a two-row grid."""


class DoesNotFill(MstCrossError):
    """Point set does not fill the requested grid."""


class NoRichCells(MstCrossError):
    """No cell reached the richness threshold; parameters too aggressive."""


class GenerationFailed(MstCrossError):
    """Random construction exhausted its retry budget."""


class SearchExhausted(MstCrossError):
    """Randomized search hit its trial budget without a witness."""


class IndistinguishableAtPrecision(MstCrossError):
    """Sum-of-square-roots comparison undecided at the maximum precision."""


class InternalInvariantViolation(MstCrossError):
    """A construction step contradicted an invariant it relies on."""
