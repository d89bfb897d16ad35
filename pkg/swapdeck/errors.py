"""Exception hierarchy for swapdeck.

Every error raised by the library derives from GraphError, so callers
(the CLI in particular) can catch one type and map it to an exit code.
"""


class GraphError(ValueError):
    """Base class for all swapdeck errors."""
    pass


class OrderTooLarge(GraphError):
    """Raised when a graph exceeds the supported vertex count."""
    pass


class MissingEdge(GraphError):
    """Raised when removing an edge the graph does not have."""
    pass


class DuplicateEdge(GraphError):
    """Raised when adding an edge the graph already has."""
    pass


class EmptyGraph(GraphError):
    """Raised when an operation needs at least one edge."""
    pass


class SizeOutOfRange(GraphError):
    """Raised when a requested size (sub-deck, swap set, cap) is out of range."""
    pass


class InvalidSubDeck(GraphError):
    """Raised when a sub-deck is not a sub-multiset of the host's edge-deck."""
    pass


class EdgeNotPresent(GraphError):
    """Raised when a swap search is asked about an edge the graph lacks."""
    pass


class NotAFamilyInstance(GraphError):
    """Raised when a graph is not a generated family instance."""
    pass


class SizeOutOfTheoremRange(GraphError):
    """Raised when a family size lies outside the range its theorem covers."""
    pass


class ParameterOutOfRange(GraphError):
    """Raised when a generator parameter is invalid for its family."""
    pass


class NotBipartiteWithGivenParts(GraphError):
    """Raised when a graph has an edge inside one of the declared parts."""
    pass


class MalformedLine(GraphError):
    """Raised when a graph6 line cannot be decoded."""
    pass


class WitnessVerificationError(GraphError):
    """Raised when a constructed certificate fails its own re-check."""
    pass


class ConfigurationError(GraphError):
    """Raised when a configuration fails validation."""
    pass
