"""Exception types shared across the package."""


class TwoTransError(Exception):
    """Base class for all errors raised by twotrans."""


class ParseError(TwoTransError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DomainError(TwoTransError, ValueError):
    """Input outside an operation's domain (bad parameter, wrong graph class, ...)."""


class BudgetExceeded(TwoTransError, RuntimeError):
    """The brute-force search hit its node budget before reaching a verdict."""


class CertificateError(TwoTransError, ValueError):
    """A certificate failed a check that its construction should guarantee."""
