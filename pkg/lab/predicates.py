"""
🔺 Graph-class predicates for the theorem families

Cycles up to length five are enumerated exhaustively with networkx; triangles
come from an edge/common-neighbor scan. Every result carries a witness that
can be re-checked: vertex tuples listed in cycle order.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple

import networkx as nx

from config.search_constants import SearchConstants
from core.graph import Graph

from .mad import mad_witness

logger = logging.getLogger(__name__)

Cycle = Tuple[int, ...]


@dataclass(frozen=True)
class PredicateResult:
    """holds plus the structure that decided it (when there is one)"""
    holds: bool
    witness: Optional[Tuple] = None

    def __bool__(self) -> bool:
        return self.holds


# ==================== CYCLE HELPERS ====================

def triangles(g: Graph) -> List[Cycle]:
    """Every triangle once, as an increasing vertex triple"""
    found = []
    for u, v in sorted((min(a, b), max(a, b)) for a, b in g.edges):
        common = set(g.neighbors(u)) & set(g.neighbors(v))
        found.extend((u, v, w) for w in sorted(common) if w > v)
    return sorted(found)


def _canonical_rotation(cycle: Cycle) -> Cycle:
    i = cycle.index(min(cycle))
    rotated = cycle[i:] + cycle[:i]
    if rotated[-1] < rotated[1]:
        rotated = (rotated[0],) + tuple(reversed(rotated[1:]))
    return rotated


def short_cycles(g: Graph, length: int) -> List[Cycle]:
    """
    Every cycle of exactly `length` vertices, once each

    Listed from its smallest vertex towards the smaller neighbor.
    """
    if length > SearchConstants.PREDICATE_CYCLE_BOUND:
        raise ValueError(f"cycle enumeration is bounded at length {SearchConstants.PREDICATE_CYCLE_BOUND}")
    if length < 3 or g.m < length:
        return []
    found = {
        _canonical_rotation(tuple(c))
        for c in nx.simple_cycles(g.to_networkx(), length_bound=length)
        if len(c) == length
    }
    return sorted(found)


def cycle_edges(g: Graph, cycle: Cycle) -> FrozenSet[int]:
    return frozenset(g.edge_id(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))


def is_cycle(g: Graph, cycle: Cycle) -> bool:
    """Distinct vertices, consecutive ones (cyclically) adjacent"""
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))


# ==================== TRIANGLE PREDICATES ====================

def has_triangle_adjacent_short_cycle(g: Graph, max_length: int = 4) -> PredicateResult:
    """
    Some triangle shares an edge with another cycle of length 3..max_length

    Witness: (triangle, other cycle).
    """
    tris = triangles(g)
    if not tris:
        return PredicateResult(False)
    others = [c for length in range(3, max_length + 1) for c in short_cycles(g, length)]
    other_edges = [(c, cycle_edges(g, c)) for c in others]
    for t in tris:
        t_edges = cycle_edges(g, t)
        for c, c_edges in other_edges:
            if c_edges != t_edges and t_edges & c_edges:
                return PredicateResult(True, (t, c))
    return PredicateResult(False)


def five_cycles_ok(g: Graph) -> PredicateResult:
    """
    Every 5-cycle has at most three edges lying in triangles

    Witness on failure: the offending 5-cycle.
    """
    in_triangle = set()
    for t in triangles(g):
        in_triangle |= cycle_edges(g, t)
    for c in short_cycles(g, 5):
        if len(cycle_edges(g, c) & in_triangle) > 3:
            return PredicateResult(False, (c,))
    return PredicateResult(True)


def has_intersecting_triangles(g: Graph) -> PredicateResult:
    """Two distinct triangles share a vertex; witness: the pair"""
    for t1, t2 in combinations(triangles(g), 2):
        if set(t1) & set(t2):
            return PredicateResult(True, (t1, t2))
    return PredicateResult(False)


def no_adjacent_conditions(g: Graph) -> PredicateResult:
    """Combinatorial hypotheses of the Delta+2 planar theorem"""
    adjacent = has_triangle_adjacent_short_cycle(g, max_length=4)
    if adjacent:
        return PredicateResult(False, adjacent.witness)
    return five_cycles_ok(g)


# ==================== DEGREE PREDICATES ====================

def three_plus_independent(g: Graph) -> PredicateResult:
    """No edge joins two 3+-vertices; witness on failure: such an edge"""
    for u, v in g.edges:
        if g.degree(u) >= 3 and g.degree(v) >= 3:
            return PredicateResult(False, (u, v))
    return PredicateResult(True)


def _bounded_non_regular(g: Graph, bound: int) -> PredicateResult:
    if g.n == 0:
        return PredicateResult(False)
    degs = g.degrees()
    top = max(range(g.n), key=lambda v: (degs[v], -v))
    if degs[top] > bound:
        return PredicateResult(False, (top,))
    if min(degs) == bound:
        return PredicateResult(False, None)
    low = min(range(g.n), key=lambda v: (degs[v], v))
    return PredicateResult(True, (low,))


def is_subcubic_non_regular(g: Graph) -> PredicateResult:
    """Delta <= 3 and not 3-regular; witness: a vertex below 3 (or above 3 on failure)"""
    return _bounded_non_regular(g, 3)


def is_delta4_non_regular(g: Graph) -> PredicateResult:
    """Delta <= 4 and not 4-regular"""
    return _bounded_non_regular(g, 4)


def mad_below_four(g: Graph) -> PredicateResult:
    """mad(G) < 4; witness on failure: a subset of average degree >= 4"""
    value, members = mad_witness(g)
    if value < 4:
        return PredicateResult(True)
    return PredicateResult(False, members)


PREDICATES: Dict[str, Callable[[Graph], PredicateResult]] = {
    "triangle_adjacent_short_cycle": has_triangle_adjacent_short_cycle,
    "five_cycles_ok": five_cycles_ok,
    "intersecting_triangles": has_intersecting_triangles,
    "three_plus_independent": three_plus_independent,
    "subcubic_non_regular": is_subcubic_non_regular,
    "delta4_non_regular": is_delta4_non_regular,
    "mad_below_four": mad_below_four,
}


def evaluate_predicates(g: Graph) -> Dict[str, bool]:
    """All predicates, in a fixed key order"""
    return {name: bool(fn(g)) for name, fn in PREDICATES.items()}


def label_with_predicates(g: Graph):
    """GraphClassLabel including the predicate map"""
    return g.class_label(evaluate_predicates(g))

