"""Exception taxonomy shared by all satkit modules."""


class SatkitError(Exception):
    """Base class for all satkit errors."""


class UnsupportedType(SatkitError):
    """Requested a group/series the library does not realize."""


class ShapeError(SatkitError):
    """Vector or matrix dimensions do not match their parent structure."""


class DomainError(SatkitError):
    """Input violates a documented precondition (e.g. non-dominant coweight)."""


class EmptyIntersection(DomainError):
    """The requested cycle intersection S_lambda with a Schubert variety is empty."""


class EmptyFiber(DomainError):
    """The requested convolution fiber is empty (lambda not below the sum)."""


class TooLarge(SatkitError):
    """An enumeration or construction exceeds the configured budget."""


class WindowError(SatkitError):
    """The lattice window is too small to contain the requested locus."""


class SingularMatrix(SatkitError):
    """Matrix is singular where an invertible one is required."""


class NonPolynomialCount(SatkitError):
    """A point count failed to agree with its polynomial interpolation.

    Carries the witnessing prime power in ``args[1]`` when raised by
    ``interpolate_count``.
    """


class InternalInconsistency(SatkitError):
    """An internal cross-check failed; indicates a bug or wrong normalization,
    never a bad input."""


class IntegralityFailure(SatkitError):
    """A quantity certified to be a positive integer failed its tolerance."""
