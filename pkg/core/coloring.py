"""
🎨 Edge colorings and the dichromatic-path machinery

Colors are 1..kappa; 0 marks an uncolored edge. A coloring is a flat array
indexed by edge id and is only meaningful together with the graph it was made
for. Properness is not enforced by the type; use properness_violation() or
the acyclicity reports to ask.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import (
    ColoringError,
    GraphError,
    ImproperColoringError,
    NonAcyclicColoringError,
    PartialColoringError,
)
from .graph import Graph

logger = logging.getLogger(__name__)

UNCOLORED = 0


class EdgeColoring:
    """Partial or total assignment of colors 1..kappa to edge ids"""

    __slots__ = ("kappa", "_colors")

    def __init__(self, kappa: int, colors: Sequence[Optional[int]]):
        if kappa < 1:
            raise ColoringError(f"kappa must be >= 1, got {kappa}")
        normalized = []
        for e, col in enumerate(colors):
            col = UNCOLORED if col is None else int(col)
            if not 0 <= col <= kappa:
                raise ColoringError(f"color {col} on edge {e} outside 1..{kappa}")
            normalized.append(col)
        self.kappa = kappa
        self._colors: List[int] = normalized

    @classmethod
    def empty(cls, kappa: int, m: int) -> "EdgeColoring":
        return cls(kappa, [UNCOLORED] * m)

    @property
    def colors(self) -> Tuple[int, ...]:
        return tuple(self._colors)

    def __len__(self) -> int:
        return len(self._colors)

    def color(self, e: int) -> int:
        return self._colors[e]

    def is_colored(self, e: int) -> bool:
        return self._colors[e] != UNCOLORED

    def assign(self, e: int, color: int) -> None:
        if not 1 <= color <= self.kappa:
            raise ColoringError(f"color {color} outside 1..{self.kappa}")
        self._colors[e] = color

    def unassign(self, e: int) -> None:
        self._colors[e] = UNCOLORED

    def copy(self) -> "EdgeColoring":
        clone = EdgeColoring.__new__(EdgeColoring)
        clone.kappa = self.kappa
        clone._colors = list(self._colors)
        return clone

    def with_kappa(self, kappa: int) -> "EdgeColoring":
        return EdgeColoring(kappa, self._colors)

    def colored_edges(self) -> List[int]:
        return [e for e, col in enumerate(self._colors) if col != UNCOLORED]

    def uncolored_edges(self) -> List[int]:
        return [e for e, col in enumerate(self._colors) if col == UNCOLORED]

    def is_total(self) -> bool:
        return UNCOLORED not in self._colors

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.kappa == other.kappa and self._colors == other._colors

    __hash__ = None

    def __repr__(self) -> str:
        return f"EdgeColoring(kappa={self.kappa}, colors={self._colors})"


@dataclass(frozen=True)
class PathQuery:
    """Maximal (alpha, beta)-dichromatic component through `origin`"""
    alpha: int
    beta: int
    origin: int
    vertices: Tuple[int, ...]
    edges: Tuple[int, ...]
    closed: bool

    @property
    def length(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class AcyclicityReport:
    """Verdict of an acyclicity scan; truthy iff acyclic"""
    acyclic: bool
    improper_at: Optional[Tuple[int, int]] = None
    cycle: Optional[Tuple[int, ...]] = None
    cycle_colors: Optional[Tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.acyclic

    def describe(self) -> str:
        if self.acyclic:
            return "acyclic"
        if self.improper_at is not None:
            v, col = self.improper_at
            return f"improper: color {col} repeats at vertex {v}"
        a, b = self.cycle_colors
        return f"bichromatic ({a},{b}) cycle on edges {list(self.cycle)}"


# ==================== HELPERS ====================

def _check_fits(c: EdgeColoring, g: Graph) -> None:
    if len(c) != g.m:
        raise ColoringError(f"coloring has {len(c)} entries but graph has {g.m} edges")


def _edge_of(g: Graph, u: int, v: int) -> int:
    try:
        return g.edge_id(u, v)
    except GraphError:
        raise ColoringError(f"{u}{v} is not an edge") from None


def _check_pair(c: EdgeColoring, alpha: int, beta: int) -> None:
    if alpha == beta:
        raise ColoringError(f"dichromatic queries need distinct colors, got {alpha} twice")
    for col in (alpha, beta):
        if not 1 <= col <= c.kappa:
            raise ColoringError(f"color {col} outside 1..{c.kappa}")


def _step(c: EdgeColoring, g: Graph, x: int, color: int) -> Optional[Tuple[int, int]]:
    """The unique (neighbor, edge) of `color` at x, or None"""
    found = None
    for y, e in g.adjacency[x]:
        if c._colors[e] == color:
            if found is not None:
                raise ImproperColoringError(x, color)
            found = (y, e)
    return found


# ==================== COLOR SETS ====================

def used_colors(c: EdgeColoring, g: Graph, v: int) -> FrozenSet[int]:
    """U(v): colors on edges at v"""
    _check_fits(c, g)
    g.degree(v)
    return frozenset(c._colors[e] for _, e in g.adjacency[v] if c._colors[e] != UNCOLORED)


def free_colors(c: EdgeColoring, g: Graph, v: int) -> FrozenSet[int]:
    """C(v) = [kappa] minus U(v)"""
    return frozenset(range(1, c.kappa + 1)) - used_colors(c, g, v)


def upsilon(c: EdgeColoring, g: Graph, u: int, v: int) -> FrozenSet[int]:
    """U(v) without the color of uv; not symmetric in u, v"""
    _check_fits(c, g)
    e = _edge_of(g, u, v)
    if not c.is_colored(e):
        raise ColoringError(f"edge {u}{v} is uncolored")
    return used_colors(c, g, v) - {c.color(e)}


def w_set(c: EdgeColoring, g: Graph, u: int, v: int) -> FrozenSet[int]:
    """Neighbors x of u whose edge ux carries a color of upsilon(u, v)"""
    ups = upsilon(c, g, u, v)
    return frozenset(x for x, e in g.adjacency[u] if c._colors[e] in ups)


def missing_edge_w_set(c: EdgeColoring, g: Graph, u: int, v: int) -> FrozenSet[int]:
    """W(uv) for an uncolored edge uv, where upsilon(uv) is all of U(v)"""
    _check_fits(c, g)
    e = _edge_of(g, u, v)
    if c.is_colored(e):
        raise ColoringError(f"edge {u}{v} is colored")
    ups = used_colors(c, g, v)
    return frozenset(x for x, f in g.adjacency[u] if c._colors[f] in ups)


# ==================== DICHROMATIC PATHS ====================

def maximal_dichromatic_path(c: EdgeColoring, g: Graph, v: int, alpha: int, beta: int) -> PathQuery:
    """
    The maximal (alpha, beta) component containing v

    When v is an end of an open path the vertex list starts at v. A closed
    component is listed from v, leaving along its alpha edge.

    Raises:
        ImproperColoringError: alpha or beta repeats at a visited vertex
    """
    _check_fits(c, g)
    _check_pair(c, alpha, beta)
    g.degree(v)

    def walk(first: int) -> Tuple[List[int], List[int], bool]:
        verts, edges = [], []
        x, col = v, first
        while True:
            other = beta if col == alpha else alpha
            _step(c, g, x, other)
            nxt = _step(c, g, x, col)
            if nxt is None:
                return verts, edges, False
            y, e = nxt
            edges.append(e)
            if y == v:
                return verts, edges, True
            verts.append(y)
            x, col = y, other

    fwd_v, fwd_e, closed = walk(alpha)
    if closed:
        return PathQuery(alpha, beta, v, (v,) + tuple(fwd_v), tuple(fwd_e), True)

    bwd_v, bwd_e, _ = walk(beta)
    if not fwd_e:
        vertices = (v,) + tuple(bwd_v)
        edges = tuple(bwd_e)
    else:
        vertices = tuple(reversed(bwd_v)) + (v,) + tuple(fwd_v)
        edges = tuple(reversed(bwd_e)) + tuple(fwd_e)
    return PathQuery(alpha, beta, v, vertices, edges, False)


def exists_critical_path(c: EdgeColoring, g: Graph, alpha: int, beta: int, u: int, v: int) -> bool:
    """Maximal (alpha, beta) path starting at u with alpha and ending at v with alpha"""
    query = maximal_dichromatic_path(c, g, u, alpha, beta)
    if query.closed or not query.edges or u == v:
        return False
    if query.vertices[0] != u or c.color(query.edges[0]) != alpha:
        return False
    return query.vertices[-1] == v and c.color(query.edges[-1]) == alpha


def exists_alternating_path(c: EdgeColoring, g: Graph, alpha: int, beta: int, u: int, v: int) -> bool:
    """Dichromatic path leaving u on alpha that reaches v on a beta edge"""
    _check_fits(c, g)
    _check_pair(c, alpha, beta)
    x, col = u, alpha
    while True:
        nxt = _step(c, g, x, col)
        if nxt is None:
            return False
        y, _ = nxt
        if y == u:
            return False
        if y == v and col == beta:
            return True
        x, col = y, (beta if col == alpha else alpha)


# ==================== CANDIDATE / VALID ====================

def candidate_colors(c: EdgeColoring, g: Graph, e: int) -> FrozenSet[int]:
    """Colors absent from every edge adjacent to the uncolored edge e"""
    _check_fits(c, g)
    if c.is_colored(e):
        raise ColoringError(f"edge {e} is already colored")
    taken = {c._colors[f] for f in g.adjacent_edges(e)}
    return frozenset(range(1, c.kappa + 1)) - taken


def valid_colors(c: EdgeColoring, g: Graph, e: int, check_acyclic: bool = True) -> FrozenSet[int]:
    """
    Candidate colors whose assignment to e closes no bichromatic cycle

    Color alpha is rejected when, for some beta present at both ends of
    e = uv, the (beta, alpha)-maximal path from u is critical towards v.

    Raises:
        ColoringError: e already colored
        NonAcyclicColoringError: the colored edges are not acyclic
    """
    candidates = candidate_colors(c, g, e)
    if check_acyclic:
        report = is_acyclic_so_far(c, g)
        if not report:
            raise NonAcyclicColoringError(f"coloring is not acyclic so far: {report.describe()}")
    u, v = g.edges[e]
    shared = used_colors(c, g, u) & used_colors(c, g, v)
    valid = set()
    for alpha in candidates:
        if not any(exists_critical_path(c, g, beta, alpha, u, v) for beta in shared):
            valid.add(alpha)
    return frozenset(valid)


# ==================== PROPERNESS / ACYCLICITY ====================

def properness_violation(c: EdgeColoring, g: Graph) -> Optional[Tuple[int, int]]:
    """First (vertex, color) where a color repeats, or None"""
    _check_fits(c, g)
    for v in g.vertices():
        seen = set()
        for _, e in g.adjacency[v]:
            col = c._colors[e]
            if col == UNCOLORED:
                continue
            if col in seen:
                return (v, col)
            seen.add(col)
    return None


def is_proper(c: EdgeColoring, g: Graph) -> bool:
    return properness_violation(c, g) is None


def _scan(c: EdgeColoring, g: Graph) -> AcyclicityReport:
    violation = properness_violation(c, g)
    if violation is not None:
        return AcyclicityReport(False, improper_at=violation)

    done = set()
    for v in g.vertices():
        present = sorted(used_colors(c, g, v))
        for i, alpha in enumerate(present):
            for beta in present[i + 1:]:
                if (v, alpha, beta) in done:
                    continue
                query = maximal_dichromatic_path(c, g, v, alpha, beta)
                if query.closed:
                    return AcyclicityReport(False, cycle=query.edges, cycle_colors=(alpha, beta))
                done.update((x, alpha, beta) for x in query.vertices)
    return AcyclicityReport(True)


def is_acyclic_so_far(c: EdgeColoring, g: Graph) -> AcyclicityReport:
    """Acyclicity of the colored edges only"""
    return _scan(c, g)


def verify_acyclic(c: EdgeColoring, g: Graph) -> AcyclicityReport:
    """
    Proper and free of bichromatic cycles

    Raises:
        PartialColoringError: some edge is uncolored
    """
    _check_fits(c, g)
    if not c.is_total():
        raise PartialColoringError(f"{len(c.uncolored_edges())} edge(s) uncolored")
    return _scan(c, g)


def swap_colors(c: EdgeColoring, g: Graph, e1: int, e2: int) -> EdgeColoring:
    """Copy of c with the colors of e1 and e2 exchanged; no checks on the result"""
    _check_fits(c, g)
    for e in (e1, e2):
        if not c.is_colored(e):
            raise ColoringError(f"edge {e} is uncolored")
    swapped = c.copy()
    swapped._colors[e1], swapped._colors[e2] = c._colors[e2], c._colors[e1]
    return swapped


def lift_coloring(c_sub: EdgeColoring, edge_map: Iterable[int], m_parent: int) -> EdgeColoring:
    """Re-index a subgraph coloring onto its parent; other parent edges stay uncolored"""
    lifted = EdgeColoring.empty(c_sub.kappa, m_parent)
    for child, parent in enumerate(edge_map):
        lifted._colors[parent] = c_sub._colors[child]
    return lifted
