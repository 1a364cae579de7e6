"""Exception types shared across the package."""


class MonidealError(Exception):
    """Base class for all domain errors raised by this package."""


class VoidComplexError(MonidealError):
    """Operation undefined on the void complex (no faces at all)."""


class VoidOrIrrelevantError(MonidealError):
    """Operation needs at least one nonempty facet."""


class FullSimplexError(MonidealError):
    """The Stanley-Reisner ideal of the full simplex is the zero ideal."""


class NotAFaceError(MonidealError):
    """The given vertex set is not a face of the complex."""


class OutOfRangeError(MonidealError, ValueError):
    """Skeleton index outside [-1, dim]."""


class ZeroOrUnitIdealError(MonidealError, ValueError):
    """Zero and unit ideals are not representable."""


class TooLargeError(MonidealError):
    """Instance exceeds a hard size cap (brute-force sweeps only)."""


class TooManyFacetsError(MonidealError):
    """Simplicial forest check is exhaustive over facet subsets; capped."""


class EmptyGraphError(MonidealError, ValueError):
    """Edge ideal of a graph with no edges would be the zero ideal."""


class BadSpecError(MonidealError, ValueError):
    """Family generator spec outside its documented parameter ranges."""


class ParseError(MonidealError, ValueError):
    """Ideal text does not match the input grammar."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
