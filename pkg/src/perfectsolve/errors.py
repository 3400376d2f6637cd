"""Exception hierarchy for the solver."""

from typing import Optional

from .models import NotInClassCertificate


class PerfectSolveError(Exception):
    """Base class for solver errors."""


class PreconditionError(PerfectSolveError, ValueError):
    """An operation was called outside its contract."""


class SizeCapError(PerfectSolveError):
    """An exhaustive checker was asked to go beyond its size cap."""

    def __init__(self, n: int, cap: int, what: str = "exhaustive check"):
        super().__init__(f"{what} refused: n={n} exceeds cap {cap}")
        self.n = n
        self.cap = cap


class ParseError(PerfectSolveError, ValueError):
    """Malformed instance text."""

    def __init__(self, message: str, line: Optional[int] = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")
        self.line = line


class PrelabelError(PerfectSolveError):
    """A prelabel fails its inequalities or yields a negative expansion weight."""


class NotInClassError(PerfectSolveError):
    """The input is outside the class the solver handles."""

    def __init__(self, certificate: NotInClassCertificate):
        super().__init__(certificate.reason)
        self.certificate = certificate


class LabelingMismatchError(NotInClassError):
    """The small-side recursive calls disagree on the labeling they produce."""
