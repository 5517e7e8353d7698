"""Exception hierarchy shared by every module."""


class MatroidError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidMatroid(MatroidError):
    def __init__(self, message, axiom=None):
        super().__init__(message)
        self.axiom = axiom


class CapacityExceeded(MatroidError):
    pass


class UnknownElement(MatroidError, KeyError):
    def __str__(self):
        return ValueError.__str__(self)


class InvalidParameters(MatroidError):
    pass


class NotIndecomposable(MatroidError):
    pass


class DegenerateElement(MatroidError):
    pass


class NotALeaf(MatroidError):
    pass


class InvalidTree(MatroidError):
    pass


class InvalidCover(MatroidError):
    pass


class NotIndecomposableCover(MatroidError):
    pass


class TargetMismatch(MatroidError):
    pass


class NegativeCoefficient(MatroidError):
    pass


class ParseError(MatroidError):
    """Malformed input file; ``key`` names the offending field when known."""

    def __init__(self, message, key=None):
        super().__init__(message)
        self.key = key
