"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class MaclaneError(Exception):
    """Base class for every error raised by this package."""


class NotTwoConnected(MaclaneError, ValueError):
    pass


class NotConnected(MaclaneError, ValueError):
    pass


class IsACycle(MaclaneError, ValueError):
    """Threads are undefined on a cycle: it has no vertex of degree != 2."""


class NotAThread(MaclaneError, ValueError):
    pass


class UnknownEdgeId(MaclaneError, KeyError):
    def __init__(self, edge_ids):
        self.edge_ids = tuple(sorted(edge_ids))
        super().__init__(f"unknown edge id(s): {list(self.edge_ids)}")

    def __str__(self) -> str:
        return self.args[0]


class SearchBudgetExceeded(MaclaneError, RuntimeError):
    def __init__(self, budget: int, what: str = "search"):
        self.budget = budget
        super().__init__(f"{what} exceeded budget of {budget} steps")


class NotASimpleBasis(MaclaneError, ValueError):
    """The supplied collection is not a simple cycle basis.

    ``report`` carries the :class:`~maclane.cycle_space.BasisReport` when the
    failure came from the precondition check, or ``None`` when it was
    detected mid-construction.
    """

    def __init__(self, message: str, report=None):
        self.report = report
        super().__init__(message)


class ThreadCoverViolation(MaclaneError, ValueError):
    pass


class InternalContradiction(MaclaneError, AssertionError):
    """A branch ruled out by the correctness argument was reached (a bug)."""


class NotPlanarEmbedding(MaclaneError, ValueError):
    pass


class FaceNotInEmbedding(MaclaneError, ValueError):
    pass


class FaceIndexOutOfRange(MaclaneError, IndexError):
    pass


class EndpointNotOnFace(MaclaneError, ValueError):
    pass


class PathNotDisjoint(MaclaneError, ValueError):
    pass


class ParseError(MaclaneError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
