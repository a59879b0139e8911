"""Exception types raised across the package.

Everything derives from ValueError: these all signal inputs that violate a
documented precondition, never internal state corruption.
"""


class ParseError(ValueError):
    """Malformed edge-list document."""


class NotATreeError(ValueError):
    """Vertex/edge data does not describe a labeled tree on 1..n."""


class InvalidVertexError(ValueError):
    """Vertex label outside 1..n for the tree at hand."""


class LabelClashError(ValueError):
    """A new vertex label collides with (or skips past) the existing labels."""


class NotConnectionEdgeError(ValueError):
    """The edge is not a connection edge of the given decomposition."""


class EndpointOutsidePartError(ValueError):
    """A replacement endpoint lies outside the part it must belong to."""


class EmptyInputError(ValueError):
    """An operation that needs at least one item received none."""


class TruncatedError(ValueError):
    """An enumeration would exceed the caller-supplied limit."""


class NotSTreeError(ValueError):
    """The tree is not an S-tree (its support's closed neighborhood misses vertices)."""


class NotMaximumMatchingError(ValueError):
    """The matching passed in is not maximum for its tree."""


class VertexNotSupportedError(ValueError):
    """The vertex carries no nonzero entry in any null vector."""


class VertexUnsaturatedError(ValueError):
    """The vertex is not saturated by the matching passed in."""


class EdgeNotInMatchingError(ValueError):
    """The edge is absent from the matching passed in."""


class CoreTooLargeError(ValueError):
    """The core is too large for an exhaustive subset scan."""


class EmptyCoreError(ValueError):
    """The operation needs a nonempty core."""


class TooLargeError(ValueError):
    """The instance exceeds the size guard of an exhaustive oracle."""
