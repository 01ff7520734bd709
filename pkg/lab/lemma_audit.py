"""
🔬 Structural lemma auditor for kappa-deletion-minimal graphs

Each lemma is checked as a predicate on the concrete graph. An entry is
NOT_APPLICABLE when its kappa gate (or every per-configuration gate) fails,
VACUOUS when the configuration it talks about does not occur, and SKIPPED when
a coloring enumeration was too large to run. Without assume_minimal the report
is informational: a violation then only says the graph cannot be minimal.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import permutations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from config.config import Config
from config.search_constants import SearchConstants
from core.coloring import lift_coloring, missing_edge_w_set, used_colors
from core.graph import Graph
from solver.exact_solver import (
    SearchBudgetExhausted,
    check_no_valid_extension,
    iter_acyclic_colorings,
    sample_acyclic_coloring,
)

from .predicates import triangles

logger = logging.getLogger(__name__)


class LemmaStatus(str, Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    NOT_APPLICABLE = "not-applicable"
    VACUOUS = "vacuous"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class LemmaEntry:
    lemma_id: str
    label: str
    status: LemmaStatus
    witness: Optional[Tuple] = None
    note: str = ""

    @property
    def applicable(self) -> bool:
        return self.status in (LemmaStatus.HOLDS, LemmaStatus.VIOLATED)

    @property
    def holds(self) -> bool:
        """Vacuously true unless violated"""
        return self.status != LemmaStatus.VIOLATED

    def to_record(self) -> Dict:
        return {
            "lemma": self.lemma_id,
            "status": self.status.value,
            "applicable": self.applicable,
            "holds": self.holds,
            "witness": list(self.witness) if self.witness is not None else None,
            "note": self.note,
        }


@dataclass
class LemmaReport:
    kappa: int
    max_degree: int
    assume_minimal: bool
    entries: List[LemmaEntry] = field(default_factory=list)

    def entry(self, lemma_id: str) -> LemmaEntry:
        for e in self.entries:
            if e.lemma_id == lemma_id:
                return e
        raise KeyError(lemma_id)

    def violations(self) -> List[LemmaEntry]:
        return [e for e in self.entries if e.status == LemmaStatus.VIOLATED]

    @property
    def all_hold(self) -> bool:
        return not self.violations()

    def to_records(self) -> List[Dict]:
        return [e.to_record() for e in self.entries]


class _Tally:
    """Collects per-configuration outcomes and folds them into one status"""

    def __init__(self):
        self.seen = 0
        self.applicable = 0
        self.failure: Optional[Tuple[Tuple, str]] = None

    def skip_gate(self) -> None:
        self.seen += 1

    def check(self, ok: bool, witness: Tuple, note: str = "") -> None:
        self.seen += 1
        self.applicable += 1
        if not ok and self.failure is None:
            self.failure = (witness, note)

    def status(self) -> Tuple[LemmaStatus, Optional[Tuple], str]:
        if self.seen == 0:
            return LemmaStatus.VACUOUS, None, ""
        if self.applicable == 0:
            return LemmaStatus.NOT_APPLICABLE, None, "configuration present but its gate fails"
        if self.failure is not None:
            return LemmaStatus.VIOLATED, self.failure[0], self.failure[1]
        return LemmaStatus.HOLDS, None, f"{self.applicable} configuration(s) checked"


def _count_at_least(g: Graph, v: int, bound: int) -> int:
    return sum(1 for x in g.neighbors(v) if g.degree(x) >= bound)


def _count_equal(g: Graph, v: int, degree: int) -> int:
    return sum(1 for x in g.neighbors(v) if g.degree(x) == degree)


def _two_vertex_orientations(g: Graph):
    """(v0, w, v) for every 2-vertex v0 and each ordering of its neighbors"""
    for v0 in g.vertices():
        if g.degree(v0) == 2:
            a, b = g.neighbors(v0)
            yield v0, a, b
            yield v0, b, a


# ==================== DEGREE LEMMAS ====================

def _kappa_two(g: Graph, kappa: int, delta: int) -> Tuple[LemmaStatus, Optional[Tuple], str]:
    if g.n < 3:
        return LemmaStatus.NOT_APPLICABLE, None, "2-connectivity needs n >= 3"
    if g.is_two_connected():
        return LemmaStatus.HOLDS, None, ""
    if not g.is_connected():
        reached = nx.node_connected_component(g.to_networkx(), 0)
        outside = min(v for v in g.vertices() if v not in reached)
        return LemmaStatus.VIOLATED, (outside,), "graph is disconnected"
    return LemmaStatus.VIOLATED, (g.cut_vertices()[0],), "cut vertex"


def _degree_sum(g: Graph, kappa: int, delta: int):
    tally = _Tally()
    for w0 in g.vertices():
        total = sum(g.degree(w) for w in g.neighbors(w0))
        tally.check(total >= kappa + g.degree(w0), (w0,), f"neighbor degree sum {total} < {kappa + g.degree(w0)}")
    return tally.status()


def _two_plus_edge(g: Graph, kappa: int, delta: int):
    tally = _Tally()
    for v0, w, v in _two_vertex_orientations(g):
        if kappa < g.degree(v) + 1:
            tally.skip_gate()
            continue
        have = _count_at_least(g, v, kappa - g.degree(v) + 2)
        need = kappa - g.degree(w) + 1
        tally.check(have >= need, (v0, v, w), f"{have} heavy neighbors, need {need}")
    return tally.status()


def _two_plus_edge_a(g: Graph, kappa: int, delta: int):
    tally = _Tally()
    for v0, w, v in _two_vertex_orientations(g):
        if not g.has_edge(w, v):
            continue
        if kappa < g.degree(v) + 1:
            tally.skip_gate()
            continue
        have = _count_at_least(g, v, kappa - g.degree(v) + 2)
        need = kappa - g.degree(w) + 2
        if have < need:
            tally.check(False, (v0, v, w), f"{have} heavy neighbors, need {need}")
        else:
            tally.check(
                g.degree(v) >= kappa - g.degree(w) + 3, (v0, v, w),
                f"deg(v)={g.degree(v)} < {kappa - g.degree(w) + 3}",
            )
    return tally.status()


def _two_plus_edge_b(g: Graph, kappa: int, delta: int):
    tally = _Tally()
    heavy = kappa - delta + 2
    for v0, w, v in _two_vertex_orientations(g):
        if _count_at_least(g, v, heavy) != kappa - delta + 1:
            tally.skip_gate()
            continue
        twos = _count_equal(g, v, 2)
        limit = g.degree(v) + delta - kappa - 3
        if twos > limit:
            tally.check(False, (v0, v, w), f"{twos} 2-neighbors, at most {limit} allowed")
        else:
            tally.check(
                g.degree(v) >= kappa - delta + 4, (v0, v, w),
                f"deg(v)={g.degree(v)} < {kappa - delta + 4}",
            )
    return tally.status()


def _two_neighbor_bound(bound_of: Callable[[int, int], int]):
    def check(g: Graph, kappa: int, delta: int):
        tally = _Tally()
        bound = bound_of(kappa, delta)
        for v0 in g.vertices():
            if g.degree(v0) != 2:
                continue
            for x in g.neighbors(v0):
                tally.check(g.degree(x) >= bound, (v0, x), f"neighbor degree {g.degree(x)} < {bound}")
        return tally.status()
    return check


def _three_plus_vertex(g: Graph, kappa: int, delta: int):
    tally = _Tally()
    bound = kappa - delta + 2
    for v in g.vertices():
        if g.degree(v) != 3:
            continue
        for x in g.neighbors(v):
            tally.check(g.degree(x) >= bound, (v, x), f"neighbor degree {g.degree(x)} < {bound}")
    return tally.status()


def _n3n(g: Graph, kappa: int, delta: int):
    tally = _Tally()
    target = kappa - delta + 3
    for w in g.vertices():
        if g.degree(w) != target:
            continue
        threes = _count_equal(g, w, 3)
        tally.check(threes <= kappa - delta + 1, (w,), f"{threes} neighbors of degree three")
    return tally.status()


# ==================== 3-VERTEX CONFIGURATIONS ====================

def _good3_configurations(g: Graph, kappa: int, delta: int):
    """(v, w) with v a 3-vertex and w a neighbor of degree kappa - Delta + 2"""
    target = kappa - delta + 2
    for v in g.vertices():
        if g.degree(v) != 3:
            continue
        for w in g.neighbors(v):
            if g.degree(w) == target:
                yield v, w


def _good3_items(g: Graph, kappa: int, delta: int, v1: int, v2: int) -> List[str]:
    """Failing items among (b), (d), (e), (f) for the labeling (v1, v2)"""
    d2 = g.degree(v2)
    failed = []
    if not (g.degree(v1) == delta and delta >= d2 >= kappa - delta + 3):
        failed.append("b")
    if _count_at_least(g, v1, kappa - delta + 2) < kappa - d2 + 1:
        failed.append("d")
    if _count_at_least(g, v2, kappa - d2 + 2) < kappa - delta:
        failed.append("e")
    if _count_at_least(g, v2, 4) < kappa - delta + 1:
        failed.append("f")
    return failed


def _good_three_vertex(g: Graph, kappa: int, delta: int):
    tally = _Tally()
    for v, w in _good3_configurations(g, kappa, delta):
        if set(g.neighbors(v)) & set(g.neighbors(w)):
            tally.check(False, (v, w), "(c): wv lies in a triangle")
            continue
        low = [x for x in g.neighbors(w) if g.degree(x) <= 3]
        if len(low) != 1:
            tally.check(False, (v, w), f"(c): w has {len(low)} neighbors of degree at most three")
            continue

        a, b = [x for x in g.neighbors(v) if x != w]
        labelings = [(a, b), (b, a)]
        best = min(labelings, key=lambda pair: len(_good3_items(g, kappa, delta, *pair)))
        failed = _good3_items(g, kappa, delta, *best)
        tally.check(not failed, (v, w) + best, f"items {','.join(failed)} fail under the best labeling")
    return tally.status()


def _good_three_vertex_a(g: Graph, kappa: int, delta: int, node_budget: int = SearchConstants.GOOD3_NODE_BUDGET):
    configs = list(_good3_configurations(g, kappa, delta))
    if not configs:
        return LemmaStatus.VACUOUS, None, ""
    if g.m > Config.GOOD3_MAX_EDGES:
        return LemmaStatus.SKIPPED, None, f"m={g.m} over the enumeration gate {Config.GOOD3_MAX_EDGES}"

    tally = _Tally()
    for v, w in configs:
        e = g.edge_id(v, w)
        sub = g.delete_edge(e)
        counted = 0
        try:
            for c_sub in iter_acyclic_colorings(
                sub.graph, kappa, node_budget=node_budget,
            ):
                counted += 1
                c = lift_coloring(c_sub, sub.edge_map, g.m)
                common = used_colors(c, g, w) & used_colors(c, g, v)
                if len(common) != 1:
                    tally.check(False, (v, w), f"{len(common)} common colors at w and v")
                    break
        except SearchBudgetExhausted:
            logger.warning(f"⚠️ Good-3-vertex (a) enumeration over budget at edge {v}{w}")
            return LemmaStatus.SKIPPED, None, "enumeration exceeded its node budget"
        if counted == 0:
            tally.skip_gate()
        elif tally.failure is None:
            tally.check(True, (v, w))
    return tally.status()


def _l9(g: Graph, kappa: int, delta: int):
    tally = _Tally()
    target = kappa - delta + 3
    for w0 in g.vertices():
        if g.degree(w0) != 3:
            continue
        for w in g.neighbors(w0):
            if g.degree(w) != target:
                continue
            w1, w2 = [x for x in g.neighbors(w0) if x != w]
            if not (g.has_edge(w, w1) and g.has_edge(w, w2)):
                continue
            if g.degree(w1) != delta or g.degree(w2) != delta:
                tally.check(False, (w0, w, w1, w2), "w1, w2 are not both of maximum degree")
                continue
            low = {x for x in g.neighbors(w) if g.degree(x) < delta - 1}
            tally.check(low == {w0}, (w0, w), f"low-degree neighbors of w: {sorted(low)}")
    return tally.status()


# ==================== TRIANGLE LEMMAS ====================

def _no44t(g: Graph, kappa: int, delta: int):
    tally = _Tally()
    for t in triangles(g):
        for w in t:
            others = [x for x in t if x != w]
            if any(g.degree(x) != 4 for x in others):
                continue
            tau = g.degree(w)
            threes = _count_equal(g, w, 3)
            tally.check(threes <= tau - 3, (w,) + tuple(others), f"{threes} neighbors of degree three, tau={tau}")
    return tally.status()


def _no444(g: Graph, kappa: int, delta: int):
    for t in triangles(g):
        if all(g.degree(x) == 4 for x in t):
            return LemmaStatus.VIOLATED, t, "(4,4,4)-triangle"
    return LemmaStatus.HOLDS, None, ""


# ==================== FACT 2 ====================

def _fact2(g: Graph, kappa: int, delta: int, seed: int = 0):
    """
    One acyclic coloring of each G-uv: no valid extension, and the degree
    bound read with W(uv) and with W(vu)
    """
    if g.m > Config.FACT2_MAX_EDGES:
        return LemmaStatus.SKIPPED, None, f"m={g.m} over the Fact 2 gate {Config.FACT2_MAX_EDGES}"

    tally = _Tally()
    readings = {"W(uv)": 0, "W(vu)": 0}
    bounded = 0
    for e, (u, v) in enumerate(g.edges):
        sub = g.delete_edge(e)
        for sample in range(SearchConstants.FACT2_SAMPLES):
            rng = np.random.default_rng([seed, e, sample])
            c_sub = sample_acyclic_coloring(sub.graph, kappa, rng)
            if c_sub is None:
                tally.skip_gate()
                continue
            c = lift_coloring(c_sub, sub.edge_map, g.m)
            if not check_no_valid_extension(g, e, c, kappa):
                tally.check(False, (u, v), "a valid color extends the coloring of G-uv")
                continue

            s = len(used_colors(c, g, u) & used_colors(c, g, v))
            base = g.degree(u) + g.degree(v)
            if s == 0:
                tally.check(base == kappa + 2, (u, v), f"s=0 but deg(u)+deg(v)={base}")
                continue
            bounded += 1
            held = []
            for name, (a, b) in (("W(uv)", (u, v)), ("W(vu)", (v, u))):
                extra = sum(g.degree(x) for x in missing_edge_w_set(c, g, a, b))
                if base + extra >= kappa + 2 * s + 2:
                    readings[name] += 1
                    held.append(name)
            tally.check(bool(held), (u, v), f"s={s}: bound fails under both readings")

    status, witness, note = tally.status()
    if bounded:
        note = f"{note}; W(uv) held {readings['W(uv)']}/{bounded}, W(vu) held {readings['W(vu)']}/{bounded}"
    return status, witness, note.lstrip("; ")


# ==================== REGISTRY ====================

@dataclass(frozen=True)
class _Lemma:
    lemma_id: str
    label: str
    min_offset: Optional[int]
    check: Callable
    min_delta: int = 0
    needs_colorings: bool = False


LEMMAS: Sequence[_Lemma] = (
    _Lemma("kappa=2", "minimal graphs are 2-connected", None, _kappa_two),
    _Lemma("DegreeSum", "neighbor degree sum is at least kappa + deg(w0)", None, _degree_sum),
    _Lemma("2+edge", "neighbor v of a 2-vertex has >= kappa-deg(w)+1 neighbors of degree >= kappa-deg(v)+2",
           None, _two_plus_edge),
    _Lemma("2+edge(A)", "triangle through a 2-vertex forces deg(v) >= kappa-deg(w)+3", None, _two_plus_edge_a),
    _Lemma("2+edge(B)", "v has at most deg(v)+Delta-kappa-3 neighbors of degree two", 2, _two_plus_edge_b),
    _Lemma("2++edge", "neighbors of a 2-vertex have degree >= kappa-Delta+4", 2,
           _two_neighbor_bound(lambda kappa, delta: kappa - delta + 4)),
    _Lemma("24edge", "neighbors of a 2-vertex have degree >= 4", 1,
           _two_neighbor_bound(lambda kappa, delta: 4)),
    _Lemma("Good-3-vertex", "structure around a 3-vertex next to a (kappa-Delta+2)-vertex, items (b)-(f)", 2,
           _good_three_vertex),
    _Lemma("Good-3-vertex(a)", "exactly one common color at w and v in every coloring of G-wv", 2,
           _good_three_vertex_a, needs_colorings=True),
    _Lemma("3+vertex", "neighbors of a 3-vertex are (kappa-Delta+2)+-vertices", 2, _three_plus_vertex),
    _Lemma("N_3_N", "a (kappa-Delta+3)-vertex has at most kappa-Delta+1 neighbors of degree three", 2, _n3n),
    _Lemma("L9", "a 3-vertex in two triangles at a (kappa-Delta+3)-vertex sees Delta-vertices", 2, _l9),
    _Lemma("NO44t", "the tau-vertex of a (4,4,tau)-triangle has at most tau-3 neighbors of degree three", 3,
           _no44t),
    _Lemma("NO444", "no (4,4,4)-triangles when Delta >= 5", 2, _no444, min_delta=5),
    _Lemma("Fact2", "no valid extension of G-uv and the degree bound with the W set", None, _fact2,
           needs_colorings=True),
)

LEMMA_IDS: Tuple[str, ...] = tuple(lemma.lemma_id for lemma in LEMMAS)


def lemma_audit(
    g: Graph,
    kappa: int,
    assume_minimal: bool = False,
    coloring_checks: bool = True,
    seed: Optional[int] = None,
    node_budget: Optional[int] = None,
) -> LemmaReport:
    """
    Evaluate every structural lemma on g at kappa

    Args:
        g: Graph to audit
        kappa: Number of colors the minimality refers to
        assume_minimal: Caller certified kappa-deletion-minimality
        coloring_checks: Run the entries that enumerate or sample colorings
        seed: Seed for the Fact 2 samples (defaults to AECL_SEED)
        node_budget: Node budget of the Good-3-vertex (a) enumeration (0 = unlimited)

    Returns:
        LemmaReport with one entry per lemma, in a fixed order
    """
    seed = Config.DEFAULT_SEED if seed is None else seed
    delta = g.max_degree() if g.n else 0
    report = LemmaReport(kappa=kappa, max_degree=delta, assume_minimal=assume_minimal)

    for lemma in LEMMAS:
        if g.n == 0 or delta > kappa:
            status, witness, note = LemmaStatus.NOT_APPLICABLE, None, f"Delta={delta} exceeds kappa={kappa}"
        elif lemma.min_offset is not None and kappa < delta + lemma.min_offset:
            status, witness, note = LemmaStatus.NOT_APPLICABLE, None, f"needs kappa >= Delta+{lemma.min_offset}"
        elif delta < lemma.min_delta:
            status, witness, note = LemmaStatus.NOT_APPLICABLE, None, f"needs Delta >= {lemma.min_delta}"
        elif lemma.needs_colorings and not coloring_checks:
            status, witness, note = LemmaStatus.SKIPPED, None, "coloring checks disabled"
        elif lemma.lemma_id == "Fact2":
            status, witness, note = _fact2(g, kappa, delta, seed)
        elif lemma.lemma_id == "Good-3-vertex(a)":
            budget = SearchConstants.GOOD3_NODE_BUDGET if node_budget is None else node_budget
            status, witness, note = _good_three_vertex_a(g, kappa, delta, budget)
        else:
            status, witness, note = lemma.check(g, kappa, delta)
        report.entries.append(LemmaEntry(lemma.lemma_id, lemma.label, status, witness, note))

    if report.violations():
        log = logger.warning if assume_minimal else logger.debug
        log(f"❌ {len(report.violations())} lemma violation(s) at kappa={kappa}: "
            f"{', '.join(e.lemma_id for e in report.violations())}")
    return report
