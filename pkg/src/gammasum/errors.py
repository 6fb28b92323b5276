"""Exception hierarchy shared by all gammasum modules."""


class GammaSumError(Exception):
    """Base class for all errors raised by this package."""


class PoleError(GammaSumError, ValueError):
    """Argument lies within machine tolerance of a Gamma-function pole."""


class DomainError(GammaSumError, ValueError):
    """Input outside the mathematical domain of the operation."""


class InconsistentCoefficients(GammaSumError, ValueError):
    """The Gamma-term coefficients leave no admissible contour strip."""


class NoConvergence(GammaSumError, ArithmeticError):
    """A numerical evaluation failed to meet its error tolerance."""


class OracleDiverged(GammaSumError, ArithmeticError):
    """A truncated-series oracle did not settle before its term budget."""


class ParseError(GammaSumError, ValueError):
    """A job configuration file or CLI argument could not be interpreted."""
