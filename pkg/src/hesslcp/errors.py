"""Exception types shared across the package."""


class HessLCPError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(HessLCPError):
    """Shapes do not line up (non-square matrix, wrong vector length, ...)."""


class IndexSetError(HessLCPError):
    """An index set is empty, out of range, or contains duplicates."""


class SingularMatrixError(HessLCPError):
    """Gaussian elimination found no nonzero pivot in some column."""


class AllZeroError(HessLCPError):
    """A lexicographic sign vector was identically zero (internal invariant broken)."""


class PrefixIncompleteError(HessLCPError):
    """Candidate enumeration asked for a stage whose prefix bases are not filled yet."""


class StructureError(HessLCPError):
    """The matrix does not have the band structure a solver requires."""


class NoCandidatePassedError(HessLCPError):
    """The staged solver produced a non-solution; the input was not a P-matrix
    (or an internal invariant is broken)."""


class NoOptimalBasisError(HessLCPError):
    """Exhaustive enumeration found no optimal basis; the input was not a P-matrix."""


class TooLargeError(HessLCPError):
    """The problem exceeds an enumeration, digraph, or fallback size guard."""


class MalformedCycleError(HessLCPError):
    """A vertex sequence is not a walk along hypercube edges."""


class InstanceFormatError(HessLCPError):
    """An instance or cycle file could not be parsed."""


class InvalidArgumentError(HessLCPError):
    """A parameter is outside its documented domain."""
