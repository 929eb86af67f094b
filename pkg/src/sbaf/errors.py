"""Exception hierarchy shared by the library and the command line."""


class SBAFError(Exception):
    """Base class for all errors raised by this package."""


class UnknownIdError(SBAFError, KeyError):
    """An argument or sentence id is not part of the framework."""

    def __str__(self):
        return Exception.__str__(self)


class DomainError(SBAFError, ValueError):
    """A sentence set reaches outside Sent(A)."""


class PreconditionError(SBAFError, ValueError):
    """An operation was called outside its precondition."""


class ConfigError(SBAFError, ValueError):
    pass


class CapExceededError(SBAFError):
    """Exhaustive enumeration refused because the input is above the cap."""

    def __init__(self, what, size, cap, flag):
        self.what, self.size, self.cap, self.flag = what, size, cap, flag
        super().__init__(
            f"{size} {what} exceed the enumeration cap of {cap}; "
            f"raise it with {flag} if the 2^{size} blowup is intended"
        )


class ParseError(SBAFError, ValueError):
    def __init__(self, message, line=None, column=None, path=None):
        self.message, self.line, self.column, self.path = message, line, column, path
        where = ""
        if line is not None:
            where = f"{path or '<input>'}:{line}:{column or 1}: "
        super().__init__(where + message)
