"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class TourwidthError(Exception):
    """Base class for every error raised by this package."""


class InputError(TourwidthError):
    """Malformed input: bad digraph, bad decomposition, bad file."""


class ShapeError(InputError):
    pass


class LoopArc(InputError):
    def __init__(self, v: int):
        super().__init__(f"loop arc at vertex {v}")
        self.v = v


class NotSemiComplete(InputError):
    def __init__(self, u: int, v: int):
        super().__init__(f"no arc between vertices {u} and {v}")
        self.u, self.v = u, v


class NotTournament(InputError):
    def __init__(self, u: int, v: int):
        super().__init__(f"digon between vertices {u} and {v}")
        self.u, self.v = u, v


class BadParameter(InputError):
    pass


class DecompositionError(InputError):
    """A path decomposition violates one of its three defining properties."""


class CoverageViolation(DecompositionError):
    def __init__(self, v: int):
        super().__init__(f"property (i): vertex {v} is in no bag")
        self.v = v


class ContiguityViolation(DecompositionError):
    def __init__(self, v: int, i: int, j: int, k: int):
        super().__init__(f"property (ii): vertex {v} in bags {i} and {k} but not in bag {j}")
        self.v, self.i, self.j, self.k = v, i, j, k


class ArcViolation(DecompositionError):
    def __init__(self, u: int, v: int):
        super().__init__(f"property (iii): arc ({u},{v}) is not covered")
        self.u, self.v = u, v


class UnknownVertex(TourwidthError, KeyError):
    pass


class DuplicateVertex(TourwidthError, ValueError):
    pass


class PreconditionUnmet(TourwidthError):
    pass


class InternalContradiction(TourwidthError):
    """A branch that is impossible on verified input was reached."""


class BudgetExceeded(TourwidthError):
    def __init__(self, message: str, bound: int | None = None):
        super().__init__(message)
        self.bound = bound


class CertificateUnavailable(TourwidthError):
    pass
