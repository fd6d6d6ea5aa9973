"""Exception hierarchy shared by every layer."""


class TiercertError(Exception):
    pass


class UsageError(TiercertError):
    """Bad input: mismatched rings, out-of-range indices, unsupported cases."""


class NotEquidimensional(UsageError):
    pass


class NotGraded(UsageError):
    """Raised where minimality needs a graded presentation and none exists."""


class GrammarError(UsageError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}")
        self.message = message
        self.line = line
        self.column = column


class SearchExhausted(TiercertError):
    def __init__(self, message: str, task=None):
        super().__init__(message)
        self.task = task


class PrimalityUndecided(TiercertError):
    def __init__(self, message: str, ideal=None):
        super().__init__(message)
        self.ideal = ideal


class BuilderInvariantViolation(TiercertError):
    """A verified intermediate failed; indicates a bug or a bad witness."""


class Cancelled(TiercertError):
    pass
