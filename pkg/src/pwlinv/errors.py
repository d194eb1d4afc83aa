"""Exception types raised across the package."""


class PwlinvError(Exception):
    """Base class for all library errors."""


class MapValidationError(PwlinvError):
    """A piece list does not describe a continuous conewise-linear map."""


class GapOrOverlap(MapValidationError):
    """The sectors do not tile the circle."""


class EmptyInteriorCone(MapValidationError):
    """A sector has nonpositive width."""


class DiscontinuousBoundary(MapValidationError):
    """Adjacent matrices disagree on a shared boundary ray."""

    def __init__(self, i, j, u, mismatch_norm):
        self.i = i
        self.j = j
        self.u = u
        self.mismatch_norm = mismatch_norm
        super().__init__(
            f"pieces {i} and {j} disagree on ray {u}: mismatch {mismatch_norm:.3e}"
        )


class SingularMatrix(PwlinvError):
    """A matrix required to be invertible is singular."""


class SingularA(SingularMatrix):
    """The positive-side matrix of a half-space map is singular."""


class DegenerateMap(PwlinvError):
    """Piece determinants are zero or of mixed sign."""


class NonIntegerWinding(PwlinvError):
    """The accumulated sweep is not close enough to a multiple of a turn."""


class NotInvertible(PwlinvError):
    """An inverse was requested for a map whose degree is not +-1."""


class DegreeOne(PwlinvError):
    """A collision witness was requested but none exists (|degree| <= 1)."""


class GenerationFailed(PwlinvError):
    """The random-instance generator exhausted its attempt budget."""


class NotApplicable(PwlinvError):
    """The requested construction does not apply to this instance."""


class DimensionMismatch(PwlinvError):
    """Matrix collections of inconsistent shape."""


class ExpressionError(PwlinvError):
    """Base class for scalar-expression failures."""


class ExpressionSyntaxError(ExpressionError):
    """Malformed expression text; carries the byte offset of the problem."""

    def __init__(self, message, offset):
        self.offset = offset
        super().__init__(f"{message} (at offset {offset})")


class ExpressionDomainError(ExpressionError):
    """Expression is syntactically fine but evaluates outside the domain."""


class ParseError(PwlinvError):
    """A map file could not be parsed."""


class ValidationError(PwlinvError):
    """A parsed map file failed semantic validation; wraps the module error."""
