"""Exception hierarchy shared by all modules."""


class FamilyError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(FamilyError):
    """A call violated an operation's precondition (wrong ground set, set not
    in family, malformed argument)."""


class DomainError(FamilyError):
    """The input is well-formed but outside the operation's domain (e.g. a
    family that is not union-closed passed to an atoms computation)."""


class CapacityError(FamilyError):
    """An explicit size limit would be exceeded; never silently truncated."""


class ValidationError(FamilyError):
    """Structured input (a path family, a SAT instance) failed validation."""


class ParseError(FamilyError):
    """Text input could not be parsed; carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
