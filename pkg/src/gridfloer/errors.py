"""Exception hierarchy for gridfloer."""


class GridFloerError(Exception):
    """Base class for every error raised by the package."""


class InvalidGrid(GridFloerError):
    pass


class NotAPermutation(InvalidGrid):
    pass


class OverlappingMarker(InvalidGrid):
    pass


class DegenerateSize(InvalidGrid):
    pass


class NotCommutable(GridFloerError):
    pass


class NotDestabilizable(GridFloerError):
    pass


class UnknownName(GridFloerError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class ParseError(GridFloerError):
    def __init__(self, message, line, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class NotAKnot(GridFloerError):
    pass


class BucketGradingMismatch(GridFloerError):
    pass


# The following signal a bug upstream rather than bad input.

class NotDivisible(GridFloerError):
    pass


class NormalizationFailed(GridFloerError):
    pass


class EmptyHomology(GridFloerError):
    pass


class OracleTooLarge(GridFloerError):
    pass
