"""Exception hierarchy for hilbcat."""
from typing import Optional


class HilbcatError(Exception):
    """Base class for every error raised by the library."""


class RingMismatchError(HilbcatError):
    """Operands live over different scalar rings."""


class ScalarParseError(HilbcatError, ValueError):
    """A scalar string does not match the ring's serialization."""


class NoInverseError(HilbcatError, ZeroDivisionError):
    """Zero input, or a ring without multiplicative inverses."""


class ShapeMismatchError(HilbcatError):
    """Matrix dimensions or domains/codomains do not line up."""


class NotHermitianError(HilbcatError):
    pass


class NotPositiveDefiniteError(HilbcatError):
    pass


class SingularMatrixError(HilbcatError):
    """Gauss-Jordan found no pivot in a square matrix."""


class SingularGramError(SingularMatrixError):
    pass


class NotAHomomorphismError(HilbcatError):
    """A map table fails additivity, zero or scalar preservation."""


class IllDefinedInnerProductError(HilbcatError):
    """The tensor quotient inner product depends on representatives."""


class FactorizationMismatchError(HilbcatError):
    """Two factorizations do not factor the same morphism."""


class BoundPreconditionError(HilbcatError):
    pass


class EnrichmentMismatchError(HilbcatError):
    """Categorical composite and entrywise oracle disagree."""


class ConfigError(HilbcatError):
    pass


class UnknownSuiteError(ConfigError):
    pass


class FixtureParseError(HilbcatError):
    """Fixture could not be parsed; ``position`` locates the problem."""

    def __init__(self, message: str, position: Optional[str] = None):
        self.position = position
        if position:
            message = f"{position}: {message}"
        super().__init__(message)


class NoNegationError(HilbcatError, ArithmeticError):
    """Subtraction requested in a ring without additive inverses."""


class NotPositiveError(HilbcatError, ValueError):
    """A scalar is not a sum of elements t‡t."""


class InvalidSemimoduleError(HilbcatError):
    """Tables violate the semimodule or inner-product equations."""
