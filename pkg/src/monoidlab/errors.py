"""Exception hierarchy shared by all monoidlab modules."""


class MonoidLabError(Exception):
    """Base class for all monoidlab errors."""


class AlphabetMismatch(MonoidLabError):
    """Two values that must share an alphabet do not."""


class WordSyntaxError(MonoidLabError):
    """A word text could not be parsed over the given alphabet."""


class IdentitySyntaxError(MonoidLabError):
    """An identity text is malformed."""


class PresentationSyntaxError(MonoidLabError):
    """A presentation file is malformed; carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PatternError(MonoidLabError):
    """A kernel-class descriptor is malformed."""


class NotConfluent(MonoidLabError):
    """An operation that needs unique normal forms got a non-confluent system."""


class BudgetExceeded(MonoidLabError):
    """Element closure outgrew its budget; the monoid may be infinite."""


class RelationViolated(MonoidLabError):
    """A generator map does not respect a defining relation."""
