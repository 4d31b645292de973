"""Exception hierarchy shared by every thzkit module."""


class ThzkitError(Exception):
    """Base class; the CLI maps these to exit status 1."""


class DomainError(ThzkitError, ValueError):
    """An argument lies outside the domain of the model."""


class UnitError(ThzkitError, ValueError):
    pass


class ParseError(ThzkitError, ValueError):
    pass


class SingularityError(ThzkitError, ZeroDivisionError):
    pass


class ConvergenceError(ThzkitError, ArithmeticError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class ModeNotBoundError(ThzkitError):
    pass


class NoResonanceError(ThzkitError):
    pass


class IntegrationError(ThzkitError, ArithmeticError):
    pass


class OutOfRangeError(DomainError):
    pass


class MissingGeometryError(ThzkitError):
    pass


class GrazingError(DomainError):
    pass


class UsageError(ThzkitError):
    """Malformed command-line input; the CLI maps this to exit status 2."""
