"""Exception hierarchy shared by the library, the session runner and the CLI."""


class AlgKernelError(Exception):
    """A mathematical-domain failure (CLI exit code 1)."""


class InfiniteError(AlgKernelError):
    """A quotient that was expected to be finite-dimensional is not."""


class OrderingError(AlgKernelError):
    """An operation received an ordering of the wrong kind (global vs local)."""


class NotGroebnerError(AlgKernelError):
    """Input claimed to be a Groebner basis fails Buchberger's criterion."""


class HypothesisError(AlgKernelError):
    """Preconditions of a geometric algorithm are violated."""


class SessionError(Exception):
    """Lexical, syntactic or name-resolution error in session input (exit code 2).

    ``line`` and ``column`` are 1-based; ``expected`` lists acceptable tokens.
    """

    def __init__(self, message: str, line: int = 0, column: int = 0, expected=()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        where = "line %d, column %d: " % (line, column) if line else ""
        extra = " (expected %s)" % ", ".join(self.expected) if self.expected else ""
        super().__init__(where + message + extra)
