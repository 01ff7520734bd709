"""
⚡ Greedy acyclic coloring with local repair

A pass colors edges in solver order with the least valid color. When an edge
has no valid color the repair step tries, in order:
    (i)   recolor one adjacent edge to another valid color
    (ii)  swap the colors of two edges at an end of the stalled edge
    (iii) uncolor the far end of a critical path blocking a candidate color
Pass 0 is deterministic. Later passes draw an RNG stream seeded by
(seed, pass index) that shuffles the edge order and the order in which
candidate repair moves are tried. The first successful pass wins.
"""

import logging
from collections import deque
from itertools import combinations
from typing import List, Optional

import numpy as np

from config.schema import EdgeOrder, Fallback, HeuristicConfig, SolverConfig
from config.search_constants import SearchConstants
from core.coloring import (
    EdgeColoring,
    candidate_colors,
    exists_critical_path,
    is_acyclic_so_far,
    maximal_dichromatic_path,
    swap_colors,
    used_colors,
    valid_colors,
    verify_acyclic,
)
from core.errors import SolverInvariantError
from core.graph import Graph
from core.models import SolveResult, SolveStatus

from .exact_solver import decide_colorable, edge_order

logger = logging.getLogger(__name__)


class _MoveBudget:
    def __init__(self, limit: int):
        self.left = limit

    def spend(self) -> bool:
        if self.left <= 0:
            return False
        self.left -= 1
        return True


def _maybe_shuffle(items: List, rng: Optional[np.random.Generator]) -> List:
    if rng is None or len(items) < 2:
        return list(items)
    return [items[i] for i in rng.permutation(len(items))]


def _finish(c: EdgeColoring, g: Graph, e: int) -> Optional[EdgeColoring]:
    valid = valid_colors(c, g, e, check_acyclic=False)
    if not valid:
        return None
    c.assign(e, min(valid))
    return c


def greedy_color(g: Graph, cfg: HeuristicConfig, order: Optional[List[int]] = None) -> SolveResult:
    """
    One greedy pass without repair

    Returns a STALLED result carrying the partial coloring and the edge that
    had no valid color.
    """
    if g.m and cfg.kappa < g.max_degree():
        return SolveResult(SolveStatus.NOT_COLORABLE, method="greedy")
    c = EdgeColoring.empty(cfg.kappa, g.m)
    order = order if order is not None else edge_order(g, EdgeOrder.DEGREE_SUM)
    for steps, e in enumerate(order, start=1):
        valid = valid_colors(c, g, e, check_acyclic=False)
        if not valid:
            logger.debug(f"⚠️ Greedy stalled at edge {e}")
            return SolveResult(SolveStatus.STALLED, coloring=c, nodes=steps, method="greedy", stalled_edge=e)
        c.assign(e, min(valid))
    return _verified(SolveResult(SolveStatus.COLORABLE, coloring=c, nodes=len(order), method="greedy"), g)


def local_repair(
    g: Graph,
    c: EdgeColoring,
    stalled: int,
    cfg: HeuristicConfig,
    rng: Optional[np.random.Generator] = None,
) -> Optional[EdgeColoring]:
    """
    Make room for `stalled` with at most cfg.moves_per_stall tried moves

    c is left untouched. On success the returned coloring colors `stalled`,
    is acyclic on its colored edges, and may have uncolored one other edge
    (move iii). Returns None when the budget runs out.
    """
    budget = _MoveBudget(cfg.moves_per_stall)
    if budget.left == 0:
        return None

    direct = _finish(c.copy(), g, stalled)
    if direct is not None:
        return direct

    u, v = g.edges[stalled]

    # (i) recolor one adjacent edge
    for f in _maybe_shuffle(sorted(g.adjacent_edges(stalled)), rng):
        if not c.is_colored(f):
            continue
        old = c.color(f)
        trial = c.copy()
        trial.unassign(f)
        for alpha in sorted(valid_colors(trial, g, f, check_acyclic=False) - {old}):
            if not budget.spend():
                return None
            moved = trial.copy()
            moved.assign(f, alpha)
            done = _finish(moved, g, stalled)
            if done is not None:
                logger.debug(f"🔧 Repair (i): edge {f} {old}→{alpha}")
                return done

    # (ii) swap two colors at one end
    for x in (u, v):
        around = [f for f in g.incident_edges(x) if f != stalled and c.is_colored(f)]
        for f1, f2 in _maybe_shuffle(list(combinations(around, 2)), rng):
            if not budget.spend():
                return None
            swapped = swap_colors(c, g, f1, f2)
            if not is_acyclic_so_far(swapped, g):
                continue
            done = _finish(swapped, g, stalled)
            if done is not None:
                logger.debug(f"🔧 Repair (ii): swapped edges {f1},{f2} at {x}")
                return done

    # (iii) break a blocking critical path at its far end
    shared = sorted(used_colors(c, g, u) & used_colors(c, g, v))
    for alpha in _maybe_shuffle(sorted(candidate_colors(c, g, stalled)), rng):
        for beta in shared:
            if not exists_critical_path(c, g, beta, alpha, u, v):
                continue
            if not budget.spend():
                return None
            path = maximal_dichromatic_path(c, g, u, beta, alpha)
            trial = c.copy()
            for far in path.edges[-SearchConstants.UNCOLOR_PER_STALL:]:
                trial.unassign(far)
            if alpha in valid_colors(trial, g, stalled, check_acyclic=False):
                trial.assign(stalled, alpha)
                logger.debug(f"🔧 Repair (iii): uncolored edge {path.edges[-1]} to free color {alpha}")
                return trial
    return None


def _run_pass(
    g: Graph,
    cfg: HeuristicConfig,
    order: List[int],
    rng: Optional[np.random.Generator],
) -> SolveResult:
    c = EdgeColoring.empty(cfg.kappa, g.m)
    queue = deque(order)
    failures = 0
    repaired = False
    max_steps = max(g.m, SearchConstants.STEP_FACTOR * g.m * (cfg.moves_per_stall + 1))
    steps = 0

    while queue:
        steps += 1
        e = queue.popleft()
        if steps > max_steps:
            return SolveResult(SolveStatus.STALLED, coloring=c, nodes=steps, method="repair", stalled_edge=e)
        if c.is_colored(e):
            continue
        valid = valid_colors(c, g, e, check_acyclic=False)
        if valid:
            c.assign(e, min(valid))
            failures = 0
            continue

        fixed = local_repair(g, c, e, cfg, rng)
        if fixed is None:
            failures += 1
            if failures > cfg.moves_per_stall:
                return SolveResult(SolveStatus.STALLED, coloring=c, nodes=steps, method="repair", stalled_edge=e)
            queue.append(e)
            continue

        c = fixed
        failures = 0
        repaired = True
        pending = set(queue)
        queue.extend(f for f in c.uncolored_edges() if f not in pending)

    return SolveResult(
        SolveStatus.COLORABLE, coloring=c, nodes=steps, method="repair" if repaired else "greedy",
    )


def _verified(result: SolveResult, g: Graph) -> SolveResult:
    if result.status == SolveStatus.COLORABLE:
        report = verify_acyclic(result.coloring, g)
        if not report:
            raise SolverInvariantError(f"heuristic produced a bad coloring: {report.describe()}")
    return result


def color_with_restarts(g: Graph, cfg: HeuristicConfig) -> SolveResult:
    """
    Up to cfg.restarts greedy+repair passes, then the optional exact fallback

    Deterministic for a given (graph, config): pass 0 uses the solver order,
    pass i shuffles it with numpy.random.default_rng([seed, i]).
    """
    if g.m == 0:
        return SolveResult(SolveStatus.COLORABLE, coloring=EdgeColoring.empty(cfg.kappa, 0), method="greedy")
    if cfg.kappa < g.max_degree():
        return SolveResult(SolveStatus.NOT_COLORABLE, method="greedy")

    base = edge_order(g, EdgeOrder.DEGREE_SUM)
    nodes = 0
    last: Optional[SolveResult] = None
    for index in range(cfg.restarts):
        if index == 0:
            rng, order = None, base
        else:
            rng = np.random.default_rng([cfg.seed, index])
            order = [base[i] for i in rng.permutation(len(base))]
        result = _run_pass(g, cfg, order, rng)
        nodes += result.nodes
        if result.status == SolveStatus.COLORABLE:
            result.restart_index = index
            result.nodes = nodes
            logger.debug(f"✅ Pass {index} colored {g.m} edges with {cfg.kappa} colors")
            return _verified(result, g)
        last = result

    if Fallback(cfg.fallback) is Fallback.EXACT:
        logger.info(f"🔁 {cfg.restarts} pass(es) stalled, falling back to exact search")
        exact = decide_colorable(g, SolverConfig(kappa=cfg.kappa, node_budget=cfg.node_budget))
        exact.method = "exact-fallback"
        exact.nodes += nodes
        return _verified(exact, g)

    last.nodes = nodes
    return last
