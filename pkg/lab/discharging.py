"""
⚖️ Vertex discharging ledger

Every vertex starts with deg(v) - 4. Rule set NMAD4 (kappa = Delta + 2):
    R1  each 2-vertex receives 1 from each 6+-neighbor
    R2  each special 3-vertex receives 1/2 from each 5+-neighbor
    R3  each normal 3-vertex receives 1/3 from each 5+-neighbor
The triangle-disjoint rule set (kappa = Delta + 3) moves the same amounts
with donor thresholds 7+, 6+ and 6+. Face charges are not modelled.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List

import pandas as pd

from core.errors import NotApplicableError
from core.graph import Graph

from .vertex_classes import VertexKind, classify_vertices

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DischargeRules:
    name: str
    kappa_offset: int
    two_donor_min: int
    special_donor_min: int
    normal_donor_min: int
    two_amount: Fraction = Fraction(1)
    special_amount: Fraction = Fraction(1, 2)
    normal_amount: Fraction = Fraction(1, 3)


MAD4_RULES = DischargeRules("nmad4", kappa_offset=2, two_donor_min=6, special_donor_min=5, normal_donor_min=5)
NO_INTERSECT_RULES = DischargeRules(
    "no-intersect-vertex", kappa_offset=3, two_donor_min=7, special_donor_min=6, normal_donor_min=6,
)
RULE_SETS = {r.kappa_offset: r for r in (MAD4_RULES, NO_INTERSECT_RULES)}


@dataclass(frozen=True)
class ChargeTransfer:
    source: int
    target: int
    amount: Fraction
    rule: str


@dataclass
class ChargeLedger:
    """Initial, moved and final charges; all values are Fractions"""
    rules: str
    kappa: int
    degrees: Dict[int, int]
    kinds: Dict[int, VertexKind]
    initial: Dict[int, Fraction]
    transfers: List[ChargeTransfer] = field(default_factory=list)
    final: Dict[int, Fraction] = field(default_factory=dict)

    @property
    def total_initial(self) -> Fraction:
        return sum(self.initial.values(), Fraction(0))

    @property
    def total_final(self) -> Fraction:
        return sum(self.final.values(), Fraction(0))

    def conserved(self) -> bool:
        return self.total_initial == self.total_final

    def negative_vertices(self) -> List[int]:
        return [v for v, charge in self.final.items() if charge < 0]

    def all_nonnegative(self) -> bool:
        return not self.negative_vertices()

    def to_frame(self) -> pd.DataFrame:
        """Per-vertex table: vertex, degree, class, initial, received, given, final"""
        received = {v: Fraction(0) for v in self.initial}
        given = {v: Fraction(0) for v in self.initial}
        for t in self.transfers:
            received[t.target] += t.amount
            given[t.source] += t.amount
        rows = [
            {
                "vertex": v,
                "degree": self.degrees[v],
                "class": self.kinds[v].value,
                "initial": str(self.initial[v]),
                "received": str(received[v]),
                "given": str(given[v]),
                "final": str(self.final[v]),
            }
            for v in sorted(self.initial)
        ]
        return pd.DataFrame(rows, columns=["vertex", "degree", "class", "initial", "received", "given", "final"])


def discharge(g: Graph, kappa: int, rules: DischargeRules) -> ChargeLedger:
    """Apply a rule set; no precondition on kappa beyond classification"""
    classes = classify_vertices(g, kappa)
    ledger = ChargeLedger(
        rules=rules.name,
        kappa=kappa,
        degrees={c.vertex: c.degree for c in classes},
        kinds={c.vertex: c.kind for c in classes},
        initial={c.vertex: Fraction(c.degree - 4) for c in classes},
    )

    plan = {
        VertexKind.TWO: ("R1", rules.two_donor_min, rules.two_amount),
        VertexKind.SPECIAL_THREE: ("R2", rules.special_donor_min, rules.special_amount),
        VertexKind.NORMAL_THREE: ("R3", rules.normal_donor_min, rules.normal_amount),
    }
    for c in classes:
        if c.kind not in plan:
            continue
        rule, donor_min, amount = plan[c.kind]
        for w in g.neighbors(c.vertex):
            if g.degree(w) >= donor_min:
                ledger.transfers.append(ChargeTransfer(w, c.vertex, amount, rule))

    final = dict(ledger.initial)
    for t in ledger.transfers:
        final[t.source] -= t.amount
        final[t.target] += t.amount
    ledger.final = final

    logger.debug(
        f"⚖️ {rules.name}: {len(ledger.transfers)} transfers, total {ledger.total_final}, "
        f"{len(ledger.negative_vertices())} negative"
    )
    return ledger


def _require_offset(g: Graph, kappa: int, rules: DischargeRules) -> None:
    if kappa != g.max_degree() + rules.kappa_offset:
        raise NotApplicableError(
            f"{rules.name} rules need kappa = Delta + {rules.kappa_offset}; "
            f"got kappa={kappa}, Delta={g.max_degree()}"
        )


def discharge_mad4(g: Graph, kappa: int) -> ChargeLedger:
    """
    R1-R3 at kappa = Delta + 2

    Raises:
        NotApplicableError: kappa is not Delta + 2
    """
    _require_offset(g, kappa, MAD4_RULES)
    return discharge(g, kappa, MAD4_RULES)


def discharge_no_intersect(g: Graph, kappa: int) -> ChargeLedger:
    """Vertex rules of the triangle-disjoint argument at kappa = Delta + 3"""
    _require_offset(g, kappa, NO_INTERSECT_RULES)
    return discharge(g, kappa, NO_INTERSECT_RULES)


def rules_for(g: Graph, kappa: int) -> DischargeRules:
    """The rule set matching kappa - Delta"""
    offset = kappa - g.max_degree()
    if offset not in RULE_SETS:
        raise NotApplicableError(
            f"no discharging rules for kappa - Delta = {offset}; supported: {sorted(RULE_SETS)}"
        )
    return RULE_SETS[offset]
