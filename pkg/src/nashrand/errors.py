"""Exception types shared across the library and the command-line front end."""


class NashrandError(Exception):
    """Base class for all library errors."""


class SingularMatrix(NashrandError):
    """Raised when an exact solve meets a matrix with determinant zero."""


class NotADistribution(NashrandError):
    """Input is not a probability distribution (negative entry or sum != 1)."""


class DimensionTooLarge(NashrandError):
    """Game dimension exceeds the configured enumeration limit."""


class NoEquilibriumFound(NashrandError):
    """Enumeration finished without equilibria (only possible when capped)."""


class UnsupportedDimension(NashrandError):
    """Family generator called outside its valid dimension range."""


class UnknownFamily(NashrandError):
    """Family name not recognized by the generators."""


class SymmetryViolation(NashrandError):
    """Matrix fails the claimed row/column permutation symmetry."""


class HypothesisViolation(NashrandError):
    """A construction's precondition fails (zero determinant, bad shape...)."""


class HasPureNE(NashrandError):
    """2x2 closed form does not apply: the game has a pure equilibrium.

    Both minimal complexities are 1 in that case; the values are carried in
    the ``complexities`` attribute for callers that want them.
    """

    def __init__(self, message: str = "game has a pure equilibrium"):
        super().__init__(message)
        self.complexities = (1, 1)


class SamplerStall(NashrandError):
    """Sampling walk exceeded the hard depth cap (implementation bug guard)."""


class ParseError(NashrandError):
    """Malformed input file; the message names the offending field."""


class DimensionMismatch(NashrandError):
    """Profile and game dimensions disagree."""
