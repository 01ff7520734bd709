"""
🔍 Exact acyclic edge coloring search

Backtracking over edges with incremental validity checks: giving color a to
e = uv is rejected when, for some color b present at both u and v, the
(b, a)-maximal path leaving u ends at v. Colors are symmetry broken by first
occurrence along the edge order, and an assignment that leaves an adjacent
uncolored edge with every color already present at its ends is pruned.
"""

import logging
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from config.schema import EdgeOrder, SolverConfig
from core.coloring import (
    EdgeColoring,
    is_acyclic_so_far,
    lift_coloring,
    valid_colors,
    verify_acyclic,
)
from core.errors import ColoringError, GraphError, NonAcyclicColoringError, SolverInvariantError
from core.graph import Graph
from core.models import IndexResult, MinimalityCertificate, SolveResult, SolveStatus

logger = logging.getLogger(__name__)


class SearchBudgetExhausted(RuntimeError):
    """Node budget ran out inside an enumeration"""


class _BudgetHit(Exception):
    pass


def edge_order(g: Graph, order: EdgeOrder) -> List[int]:
    """Visiting order; degree-sum ties broken by edge id"""
    if EdgeOrder(order) is EdgeOrder.STATIC:
        return list(range(g.m))
    degs = g.degrees()
    return sorted(range(g.m), key=lambda e: (-(degs[g.edges[e][0]] + degs[g.edges[e][1]]), e))


class ExactSolver:
    """
    One search over a fixed graph and kappa

    The state keeps, per vertex, a map color -> (neighbor, edge) of colored
    incident edges, which makes the candidate and path tests dictionary walks.
    """

    def __init__(
        self,
        g: Graph,
        kappa: int,
        node_budget: int = 0,
        order: Optional[List[int]] = None,
        symmetry_breaking: bool = True,
        forward_check: bool = True,
        rng: Optional[np.random.Generator] = None,
    ):
        if kappa < 1:
            raise ColoringError(f"kappa must be >= 1, got {kappa}")
        self.g = g
        self.kappa = kappa
        self.node_budget = node_budget
        self.order = list(order) if order is not None else edge_order(g, EdgeOrder.DEGREE_SUM)
        self.symmetry_breaking = symmetry_breaking
        self.forward_check = forward_check
        self.rng = rng
        self.nodes = 0
        self._colors = [0] * g.m
        self._at: List[Dict[int, Tuple[int, int]]] = [dict() for _ in range(g.n)]

    @classmethod
    def from_config(cls, g: Graph, cfg: SolverConfig) -> "ExactSolver":
        return cls(
            g,
            cfg.kappa,
            node_budget=cfg.node_budget,
            order=edge_order(g, cfg.edge_order),
            symmetry_breaking=cfg.symmetry_breaking,
            forward_check=cfg.forward_check,
        )

    # ==================== STATE ====================

    def _assign(self, e: int, color: int) -> None:
        u, v = self.g.edges[e]
        self._colors[e] = color
        self._at[u][color] = (v, e)
        self._at[v][color] = (u, e)

    def _unassign(self, e: int) -> None:
        u, v = self.g.edges[e]
        color = self._colors[e]
        del self._at[u][color]
        del self._at[v][color]
        self._colors[e] = 0

    def _closes_cycle(self, u: int, v: int, beta: int, alpha: int) -> bool:
        """Does the (beta, alpha) path from u end at v"""
        at = self._at
        x, col = u, beta
        while True:
            nxt = at[x].get(col)
            if nxt is None:
                return x == v
            x = nxt[0]
            col = alpha if col == beta else beta

    def _valid(self, e: int, limit: int) -> List[int]:
        u, v = self.g.edges[e]
        au, av = self._at[u], self._at[v]
        shared = [b for b in au if b in av]
        out = []
        for alpha in range(1, limit + 1):
            if alpha in au or alpha in av:
                continue
            if any(self._closes_cycle(u, v, beta, alpha) for beta in shared):
                continue
            out.append(alpha)
        if self.rng is not None and len(out) > 1:
            out = [int(x) for x in self.rng.permutation(out)]
        return out

    def _neighbors_alive(self, e: int) -> bool:
        g, at, kappa = self.g, self._at, self.kappa
        for f in g.adjacent_edges(e):
            if self._colors[f]:
                continue
            x, y = g.edges[f]
            if len(at[x]) + len(at[y]) < kappa:
                continue
            if len(at[x].keys() | at[y].keys()) >= kappa:
                return False
        return True

    def _tick(self) -> None:
        self.nodes += 1
        if self.node_budget and self.nodes > self.node_budget:
            raise _BudgetHit()

    def _snapshot(self) -> EdgeColoring:
        return EdgeColoring(self.kappa, self._colors)

    # ==================== SEARCH ====================

    def _search(self, i: int, max_used: int) -> bool:
        self._tick()
        if i == len(self.order):
            return True
        e = self.order[i]
        limit = min(self.kappa, max_used + 1) if self.symmetry_breaking else self.kappa
        for alpha in self._valid(e, limit):
            self._assign(e, alpha)
            if not self.forward_check or self._neighbors_alive(e):
                if self._search(i + 1, max(max_used, alpha)):
                    return True
            self._unassign(e)
        return False

    def _enumerate(self, i: int, max_used: int) -> Iterator[EdgeColoring]:
        self._tick()
        if i == len(self.order):
            yield self._snapshot()
            return
        e = self.order[i]
        limit = min(self.kappa, max_used + 1) if self.symmetry_breaking else self.kappa
        for alpha in self._valid(e, limit):
            self._assign(e, alpha)
            if not self.forward_check or self._neighbors_alive(e):
                yield from self._enumerate(i + 1, max(max_used, alpha))
            self._unassign(e)

    def decide(self) -> SolveResult:
        if self.g.m and self.kappa < self.g.max_degree():
            return SolveResult(SolveStatus.NOT_COLORABLE, nodes=0)
        try:
            found = self._search(0, 0)
        except _BudgetHit:
            logger.warning(f"⚠️ Node budget {self.node_budget} exhausted at kappa={self.kappa}")
            return SolveResult(SolveStatus.BUDGET_EXHAUSTED, nodes=self.nodes)

        if not found:
            return SolveResult(SolveStatus.NOT_COLORABLE, nodes=self.nodes)

        coloring = self._snapshot()
        report = verify_acyclic(coloring, self.g)
        if not report:
            raise SolverInvariantError(f"search produced a bad coloring: {report.describe()}")
        return SolveResult(SolveStatus.COLORABLE, coloring=coloring, nodes=self.nodes)

    def iter_colorings(self) -> Iterator[EdgeColoring]:
        """
        Every acyclic coloring (up to color renaming when symmetry breaking is on)

        Raises:
            SearchBudgetExhausted: node budget ran out mid-stream
        """
        if self.g.m and self.kappa < self.g.max_degree():
            return
        try:
            yield from self._enumerate(0, 0)
        except _BudgetHit:
            raise SearchBudgetExhausted(
                f"enumeration exceeded {self.node_budget} nodes at kappa={self.kappa}"
            ) from None


# ==================== MODULE API ====================

def decide_colorable(g: Graph, cfg: SolverConfig) -> SolveResult:
    """
    Decide acyclic kappa-edge-colorability

    Budget exhaustion is reported through the status, never raised.
    """
    result = ExactSolver.from_config(g, cfg).decide()
    logger.debug(f"🔍 kappa={cfg.kappa}: {result.status.value} after {result.nodes} nodes")
    return result


def acyclic_chromatic_index(g: Graph, cfg_template: Optional[SolverConfig] = None) -> IndexResult:
    """
    Least kappa with an acyclic coloring, searching upward from Delta

    Args:
        g: Graph with at least one edge
        cfg_template: Search settings; its kappa is ignored

    Returns:
        IndexResult with value set, or value None and a lower..upper bracket
        when some kappa ran out of budget

    Raises:
        GraphError: g has no edges
    """
    if g.m == 0:
        raise GraphError("acyclic chromatic index needs at least one edge")
    template = cfg_template or SolverConfig(kappa=1)

    lower = g.max_degree()
    kappa = lower
    nodes = 0
    while True:
        if kappa >= g.m:
            # one color per edge is always acyclic
            rainbow = EdgeColoring(kappa, list(range(1, g.m + 1)))
            result = SolveResult(SolveStatus.COLORABLE, coloring=rainbow)
        else:
            result = decide_colorable(g, template.model_copy(update={"kappa": kappa}))
        nodes += result.nodes
        if result.status == SolveStatus.COLORABLE:
            value = kappa if lower == kappa else None
            logger.info(f"✅ Index bracket {lower}..{kappa}" if value is None else f"✅ Index = {value}")
            return IndexResult(value, lower, kappa, coloring=result.coloring, nodes=nodes)
        if result.status == SolveStatus.NOT_COLORABLE:
            # colorability is monotone in kappa
            lower = kappa + 1
        kappa += 1


def is_deletion_minimal(g: Graph, kappa: int, cfg_template: Optional[SolverConfig] = None) -> MinimalityCertificate:
    """
    Not kappa-colorable while every G-e is

    Only single-edge deletions are searched: any proper subgraph with an edge
    missing sits inside some G-e, and colorability passes to subgraphs.
    Removing an isolated vertex leaves the edge set unchanged, so a graph with
    one is never minimal.
    """
    template = (cfg_template or SolverConfig(kappa=kappa)).model_copy(update={"kappa": kappa})

    if g.n and g.max_degree() > kappa:
        return MinimalityCertificate(
            minimal=False, applicable=False,
            reason=f"not applicable: max degree {g.max_degree()} exceeds kappa={kappa}",
        )

    whole = decide_colorable(g, template)
    nodes = whole.nodes
    if whole.status == SolveStatus.COLORABLE:
        return MinimalityCertificate(
            minimal=False, reason=f"graph is acyclically {kappa}-colorable",
            witness_coloring=whole.coloring, nodes=nodes,
        )
    if whole.status == SolveStatus.BUDGET_EXHAUSTED:
        return MinimalityCertificate(minimal=None, reason="budget exhausted on the whole graph", nodes=nodes)

    if g.n > 1:
        isolated = [v for v in g.vertices() if g.degree(v) == 0]
        if isolated:
            return MinimalityCertificate(
                minimal=False, reason=f"isolated vertex {isolated[0]}", nodes=nodes,
            )

    certificate = MinimalityCertificate(minimal=True, reason="every single-edge deletion is colorable")
    for e in range(g.m):
        sub = g.delete_edge(e)
        result = decide_colorable(sub.graph, template)
        nodes += result.nodes
        if result.status == SolveStatus.COLORABLE:
            certificate.edge_colorings[e] = lift_coloring(result.coloring, sub.edge_map, g.m)
        elif result.status == SolveStatus.NOT_COLORABLE:
            u, v = g.edges[e]
            return MinimalityCertificate(
                minimal=False, reason=f"G - {u}{v} is still not {kappa}-colorable",
                failing_edge=e, nodes=nodes,
            )
        else:
            certificate.unknown_edges.append(e)

    if certificate.unknown_edges:
        certificate.minimal = None
        certificate.reason = f"budget exhausted on {len(certificate.unknown_edges)} edge deletion(s)"
    certificate.nodes = nodes
    return certificate


def check_no_valid_extension(g: Graph, e: int, c: EdgeColoring, kappa: int) -> bool:
    """
    True iff no color is valid for e under c

    c may be indexed on G-e (length m-1) or on G with e uncolored.

    Raises:
        ColoringError: c does not fit, colors e, or uses another kappa
        NonAcyclicColoringError: c is not acyclic
    """
    if c.kappa != kappa:
        raise ColoringError(f"coloring uses kappa={c.kappa}, expected {kappa}")
    if len(c) == g.m - 1:
        c = lift_coloring(c, g.delete_edge(e).edge_map, g.m)
    elif len(c) != g.m:
        raise ColoringError(f"coloring has {len(c)} entries, expected {g.m - 1} or {g.m}")
    elif c.is_colored(e):
        raise ColoringError(f"edge {e} must be uncolored")

    report = is_acyclic_so_far(c, g)
    if not report:
        raise NonAcyclicColoringError(f"coloring of G-e is not acyclic: {report.describe()}")
    return not valid_colors(c, g, e, check_acyclic=False)


def iter_acyclic_colorings(
    g: Graph,
    kappa: int,
    symmetry_breaking: bool = True,
    node_budget: int = 0,
) -> Iterator[EdgeColoring]:
    """All acyclic kappa-colorings of g in static edge order"""
    solver = ExactSolver(
        g, kappa, node_budget=node_budget, order=list(range(g.m)),
        symmetry_breaking=symmetry_breaking, forward_check=True,
    )
    return solver.iter_colorings()


def sample_acyclic_coloring(
    g: Graph,
    kappa: int,
    rng: np.random.Generator,
    node_budget: int = 0,
) -> Optional[EdgeColoring]:
    """One acyclic coloring with randomized edge and value order; None if none exists"""
    order = [int(x) for x in rng.permutation(g.m)]
    solver = ExactSolver(
        g, kappa, node_budget=node_budget, order=order,
        symmetry_breaking=False, forward_check=True, rng=rng,
    )
    result = solver.decide()
    return result.coloring
