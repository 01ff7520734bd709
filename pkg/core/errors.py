"""
Error hierarchy for graphs, colorings and the lab

Everything derives from ValueError so callers that only know about bad input
can keep catching the builtin.
"""

from typing import Optional


class GraphError(ValueError):
    """Invalid vertex/edge id or a graph that cannot satisfy a request"""


class GraphParseError(GraphError):
    """Malformed edge-list or graph6 input"""

    def __init__(self, reason: str, line: Optional[int] = None, offset: Optional[int] = None):
        self.reason = reason
        self.line = line
        self.offset = offset
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"offset {offset}")
        suffix = f" ({', '.join(where)})" if where else ""
        super().__init__(f"{reason}{suffix}")


class SelfLoopError(GraphParseError):
    """Edge joins a vertex to itself"""


class DuplicateEdgeError(GraphParseError):
    """Edge listed twice (in either orientation)"""


class NotApplicableError(ValueError):
    """The graph does not meet an operation's shape precondition"""


class ColoringError(ValueError):
    """Coloring does not fit the graph or the request"""


class ImproperColoringError(ColoringError):
    """Two edges of the same color meet at a vertex"""

    def __init__(self, vertex: int, color: int):
        self.vertex = vertex
        self.color = color
        super().__init__(f"improper coloring: color {color} repeats at vertex {vertex}")


class PartialColoringError(ColoringError):
    """A total coloring was required"""


class NonAcyclicColoringError(ColoringError):
    """A coloring that is acyclic on its colored edges was required"""


class ColoringParseError(ColoringError):
    """Malformed coloring file"""

    def __init__(self, reason: str, line: Optional[int] = None):
        self.reason = reason
        self.line = line
        suffix = f" (line {line})" if line is not None else ""
        super().__init__(f"{reason}{suffix}")


class EnumerationCapError(ValueError):
    """Enumeration requested beyond the configured cap"""


class SolverInvariantError(RuntimeError):
    """A produced coloring failed re-verification"""
