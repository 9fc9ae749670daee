"""Exception types shared across the package."""


class FieldError(Exception):
    """Base class for all invsqfield errors."""


class DimensionMismatch(FieldError):
    """A point, source set, or region has an inconsistent dimension."""


class CoincidentSource(FieldError):
    """Evaluation point is within the exclusion distance of a source.

    The field is singular at source locations; callers must stay away.
    """


class DeltaOutOfRange(FieldError):
    """Offset radius outside [0, 1/2), the validity range of the symmetric
    closed form and its bounds."""


class UnsupportedDimension(FieldError):
    """The requested dimension is outside the validity range of a formula."""


class SourceInsideRegion(FieldError):
    """A source point lies inside (or on) the search region."""


class DimensionTooLarge(FieldError):
    """Exhaustive grid evaluation was requested in too many dimensions."""


class ProblemFileError(FieldError):
    """A problem file failed to parse or validate.

    The message names the offending field (e.g. ``weights[2]``).
    """
