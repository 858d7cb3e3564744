"""Exception hierarchy shared across the package.

Everything raised on purpose derives from DegpartError so the service and
CLI layers can map failures to input errors uniformly.
"""


class DegpartError(Exception):
    """Base class for all errors raised by this package."""


class LoopEdgeError(DegpartError):
    def __init__(self, u):
        super().__init__(f"self-loop at vertex {u}")
        self.vertex = u


class VertexOutOfRangeError(DegpartError):
    def __init__(self, u, n):
        super().__init__(f"vertex {u} out of range for n={n}")
        self.vertex = u
        self.n = n


class SameVertexError(DegpartError):
    def __init__(self, u):
        super().__init__(f"expected two distinct vertices, got {u} twice")
        self.vertex = u


class EmptyGraphError(DegpartError):
    pass


class EmptySetError(DegpartError):
    pass


class NotAPartitionError(DegpartError):
    pass


class WrongSideError(DegpartError):
    pass


class TooSmallError(DegpartError):
    pass


class TooLargeError(DegpartError):
    def __init__(self, n, limit):
        super().__init__(f"n={n} exceeds exhaustive search limit {limit}")
        self.n = n
        self.limit = limit


class PreconditionViolatedError(DegpartError):
    pass


class InternalInvariantError(DegpartError):
    """A validated output failed its own validation; always a bug."""


class UnsupportedKindError(DegpartError):
    pass


class ParseError(DegpartError):
    def __init__(self, line_no, reason):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class MissingDemandsError(DegpartError):
    pass


class UnplantableError(DegpartError):
    def __init__(self, u, reason=""):
        msg = f"no valid demand split for vertex {u}"
        if reason:
            msg += f" ({reason})"
        super().__init__(msg)
        self.vertex = u
