"""Exception types shared across the package."""


class EquipartError(Exception):
    """Base class for all equipart errors."""


class MalformedInput(EquipartError):
    """Input text could not be parsed as a graph.

    Carries ``line`` (1-based) and ``offset`` (0-based column) when the
    position is known, -1 otherwise.
    """

    def __init__(self, message: str, line: int = -1, offset: int = -1):
        super().__init__(message)
        self.line = line
        self.offset = offset

    def __str__(self) -> str:
        pos = ""
        if self.line >= 0:
            pos = f" (line {self.line}"
            pos += f", offset {self.offset})" if self.offset >= 0 else ")"
        return super().__str__() + pos


class OverlappingSets(EquipartError):
    """Two vertex sets required to be disjoint share elements."""


class NoLowDegreeVertex(EquipartError):
    """Edge elimination stalled: every non-isolated vertex has degree >= 6.

    Planar graphs always have a vertex of positive degree at most 5, so this
    signals a non-planar input.
    """


class StructureClaimViolated(EquipartError):
    """No degree-<=2 vertex and no (3, <=6)-degree edge was found.

    Triangle-free planar graphs always contain one of the two, so this
    signals an input outside that class.
    """


class RepairFailed(EquipartError):
    """No swap partner exists during partition replay; non-planar input."""


class BadParameters(EquipartError):
    """Merge parameters violate 1 <= ell < k (or the lemma's ell >= 2)."""


class UnreachableCaseII(EquipartError):
    """The merge recursion hit a case the underlying argument excludes.

    This never fires on valid input; it indicates an implementation bug.
    """


class InvalidColoring(EquipartError):
    """A supplied coloring is not a valid proper/acyclic coloring."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class InstanceTooLarge(EquipartError):
    """Brute-force oracle invoked beyond its hard size cap."""


class BadSpec(EquipartError):
    """Generator spec is inconsistent (bad n, edge count, or kind)."""
