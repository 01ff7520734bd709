"""
Result records shared by the solvers, the lab and the CLI
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional

from .coloring import EdgeColoring


class SolveStatus(str, Enum):
    COLORABLE = "colorable"
    NOT_COLORABLE = "not-colorable"
    BUDGET_EXHAUSTED = "budget-exhausted"
    STALLED = "stalled"  # heuristic only


@dataclass
class SolveResult:
    """Outcome of one decision run at a fixed kappa"""
    status: SolveStatus
    coloring: Optional[EdgeColoring] = None
    nodes: int = 0
    method: str = "exact"
    stalled_edge: Optional[int] = None
    restart_index: Optional[int] = None

    @property
    def colorable(self) -> bool:
        return self.status == SolveStatus.COLORABLE

    @property
    def decided(self) -> bool:
        return self.status in (SolveStatus.COLORABLE, SolveStatus.NOT_COLORABLE)

    def to_dict(self) -> Dict:
        return {
            "status": self.status.value,
            "kappa": self.coloring.kappa if self.coloring is not None else None,
            "colors": list(self.coloring.colors) if self.coloring is not None else None,
            "nodes": self.nodes,
            "method": self.method,
            "stalled_edge": self.stalled_edge,
            "restart": self.restart_index,
        }


@dataclass
class IndexResult:
    """
    Acyclic chromatic index or a bracket around it

    value is None when some kappa between lower and upper ran out of budget;
    upper is None when no coloring was found at all.
    """
    value: Optional[int]
    lower: int
    upper: Optional[int]
    coloring: Optional[EdgeColoring] = None
    nodes: int = 0

    @property
    def known(self) -> bool:
        return self.value is not None

    def bracket(self) -> str:
        if self.value is not None:
            return str(self.value)
        return f"{self.lower}..{self.upper if self.upper is not None else '?'}"

    def to_dict(self) -> Dict:
        return {"index": self.value, "lower": self.lower, "upper": self.upper, "nodes": self.nodes}


@dataclass
class MinimalityCertificate:
    """
    Deletion-minimality verdict

    minimal is None when a budget ran out before the question was settled.
    edge_colorings maps each parent edge e to an acyclic coloring of G-e
    re-indexed onto the parent (e left uncolored).
    """
    minimal: Optional[bool]
    applicable: bool = True
    reason: str = ""
    witness_coloring: Optional[EdgeColoring] = None
    edge_colorings: Dict[int, EdgeColoring] = field(default_factory=dict)
    failing_edge: Optional[int] = None
    unknown_edges: List[int] = field(default_factory=list)
    nodes: int = 0

    def to_dict(self) -> Dict:
        """Verdict and per-edge colorings (parent edge id -> color list)"""
        return {
            "minimal": self.minimal,
            "applicable": self.applicable,
            "reason": self.reason,
            "failing_edge": self.failing_edge,
            "unknown_edges": list(self.unknown_edges),
            "edge_colorings": {e: list(c.colors) for e, c in sorted(self.edge_colorings.items())},
            "nodes": self.nodes,
        }
