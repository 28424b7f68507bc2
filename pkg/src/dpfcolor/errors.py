"""Exception types raised by the library.

Every domain-level failure gets its own class so callers (and the CLI) can
map outcomes to exit codes without string matching.
"""


class ColoringError(Exception):
    """Base class for all library errors."""


class ParseError(ColoringError):
    """A text format could not be parsed; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


# -- coloring algebra -------------------------------------------------------

class PartialColoring(ColoringError):
    """A total coloring was required but some vertex is uncolored."""


class ColorNotInList(ColoringError):
    """A chosen color is not in that vertex's list."""


class InvalidPrecoloring(ColoringError):
    """A precoloring fails verification on its induced subgraph."""


class NoColorAvailable(ColoringError):
    """Greedy extension found no color with positive residual budget."""


class DomainOverlap(ColoringError):
    """Two colorings to be combined share a vertex."""


class InvalidInput(ColoringError):
    """An operation's precondition on its inputs does not hold."""


class NotInduced(ColoringError):
    """A vertex sequence is not a duplicate-free subset of the graph."""


class BadIndex(ColoringError):
    """An index parameter is outside its allowed range."""


class PreconditionViolated(ColoringError):
    """A configuration-extension precondition does not hold."""


class InternalInvariantViolated(ColoringError):
    """A step that is guaranteed to succeed failed; signals a bug."""


# -- plane graphs -----------------------------------------------------------

class InvalidEmbedding(ColoringError):
    """Rotation system and faces are inconsistent."""


class NotTwoConnected(ColoringError):
    """Operation requires a 2-connected plane graph."""


class NotAChord(ColoringError):
    """The given positions do not name a chord of the outer cycle."""


class NotOnOuterCycle(ColoringError):
    """The given vertex does not lie on the outer cycle."""


class LimitExceeded(ColoringError):
    """Instance size exceeds a configured desk-scale limit."""


class BadSpec(ColoringError):
    """A cycle-family specification is malformed."""


class InfeasibleParameters(ColoringError):
    """Random generator parameters cannot be satisfied."""


# -- reductions -------------------------------------------------------------

class EmptyList(ColoringError):
    """A list assignment maps some vertex to an empty list."""


class BadParameters(ColoringError):
    """Mixed-reduction parameters violate 2d > k, d <= k, |L(v)| = d."""


class NotAPartition(ColoringError):
    """The given classes do not partition the vertex set."""


# -- solvers ----------------------------------------------------------------

class BadBudget(ColoringError):
    """Budget totals or caps violate a solver precondition."""


class NotInFamily(ColoringError):
    """The input graph is outside the required cycle family."""


class TheoremViolation(ColoringError):
    """An instance that is guaranteed colorable was reported uncolorable."""
