"""Exception hierarchy shared by every module."""


class SymmetraError(Exception):
    pass


class InvalidInputError(SymmetraError, ValueError):
    """Input outside an operation's accepted domain (zero polynomial, constant, ...)."""


class DomainError(SymmetraError, ValueError):
    """A mathematical precondition failed (non-harmonic input, non-radial polynomial, ...)."""


class PreconditionError(DomainError):
    pass


class InternalAssertionError(SymmetraError, AssertionError):
    """Raised when two independent routes disagree; indicates a bug."""


class ParseError(InvalidInputError):
    def __init__(self, message, position, expected=()):
        self.position = position
        self.expected = tuple(expected)
        detail = f"{message} at offset {position}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)
