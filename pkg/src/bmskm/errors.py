"""Exception hierarchy.

Every error raised by the library derives from :class:`BMSKMError`.  The CLI
maps :class:`ParseError` to exit code 2 and every :class:`DomainError` to exit
code 3.
"""

from __future__ import annotations


class BMSKMError(Exception):
    pass


class DomainError(BMSKMError):
    """Input is well formed but outside the domain of the operation."""


class ParseError(BMSKMError):
    def __init__(self, message: str, position: int | None = None):
        self.message = message
        self.position = position
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)


class NotUnivariateT(DomainError):
    pass


class NotUnivariateS(DomainError):
    pass


class HNotUnivariate(NotUnivariateT):
    pass


class LambdaZero(DomainError):
    pass


class BetaZero(DomainError):
    pass


class QuotientUndefined(DomainError):
    pass


class UnknownSubalgebra(DomainError):
    pass


class UnknownDescriptor(DomainError):
    pass


class BoxOverflow(DomainError):
    pass


class ZeroStart(DomainError):
    pass


class ZeroVector(DomainError):
    pass


class NotPhiShaped(DomainError):
    pass
