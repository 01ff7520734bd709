"""
🎯 Counterexample hunt

For every graph of a class (enumerated, or read from a graph6 corpus) the
acyclic chromatic index is compared with rule(Delta). A graph above the rule
is a violator; violators that are also kappa-deletion-minimal get a full
lemma audit. Budget exhaustion yields an "unknown" record, never an error.
"""

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional

import pandas as pd
from tqdm import tqdm

from config.schema import GraphClass, HuntConfig, KappaRule, SolverConfig
from config.search_constants import SearchConstants
from core.graph import Graph
from core.graph_io import write_graph6
from solver.exact_solver import acyclic_chromatic_index, is_deletion_minimal

from .discharging import discharge_mad4
from .enumeration import enumerate_graphs, in_class
from .lemma_audit import lemma_audit
from .mad import max_average_degree
from .predicates import evaluate_predicates

logger = logging.getLogger(__name__)


def graph6_of(g: Graph) -> str:
    return write_graph6(g).decode("ascii").strip()


@dataclass
class HuntRecord:
    """
    One graph's outcome

    violation is None when the index bracket straddles kappa.
    """
    graph6: str
    n: int
    m: int
    max_degree: int
    kappa: int
    index: str
    violation: Optional[bool]
    minimal: Optional[bool] = None
    predicates: Dict[str, bool] = field(default_factory=dict)
    lemmas: Optional[List[Dict]] = None

    def to_record(self) -> Dict:
        """Fields in SearchConstants.RECORD_FIELDS order"""
        return {name: getattr(self, name) for name in SearchConstants.RECORD_FIELDS}

    def to_json(self) -> str:
        return json.dumps(self.to_record(), separators=(",", ":"))


@dataclass
class HuntReport:
    rule: str
    graph_class: str
    records: List[HuntRecord] = field(default_factory=list)

    @property
    def scanned(self) -> int:
        return len(self.records)

    def violations(self) -> List[HuntRecord]:
        return [r for r in self.records if r.violation]

    def unknowns(self) -> List[HuntRecord]:
        return [r for r in self.records if r.violation is None]

    def exit_code(self) -> int:
        """0 clean, 1 violations, 2 unknowns only"""
        if self.violations():
            return 1
        if self.unknowns():
            return 2
        return 0

    def to_frame(self) -> pd.DataFrame:
        columns = ["graph6", "n", "m", "max_degree", "kappa", "index", "violation", "minimal"]
        return pd.DataFrame(
            [{c: getattr(r, c) for c in columns} for r in self.records], columns=columns,
        )

    def summary(self) -> pd.DataFrame:
        """Counts per vertex count: graphs scanned, violations, unknowns"""
        frame = self.to_frame()
        if frame.empty:
            return pd.DataFrame(columns=["n", "graphs", "violations", "unknowns"])
        frame["is_violation"] = frame["violation"].fillna(False).astype(bool)
        frame["is_unknown"] = frame["violation"].isna()
        grouped = frame.groupby("n").agg(
            graphs=("graph6", "count"), violations=("is_violation", "sum"), unknowns=("is_unknown", "sum"),
        )
        return grouped.reset_index()

    def to_json_lines(self) -> str:
        return "".join(r.to_json() + "\n" for r in self.records)


def hunt_one(g: Graph, rule: KappaRule, node_budget: int = 0) -> HuntRecord:
    """Index versus rule(Delta) for one graph with at least one edge"""
    rule = KappaRule(rule)
    kappa = rule.kappa_for(g.max_degree())
    template = SolverConfig(kappa=kappa, node_budget=node_budget)
    index = acyclic_chromatic_index(g, template)

    if index.known:
        violation: Optional[bool] = index.value > kappa
    elif index.lower > kappa:
        violation = True
    elif index.upper is not None and index.upper <= kappa:
        violation = False
    else:
        violation = None

    record = HuntRecord(
        graph6=graph6_of(g), n=g.n, m=g.m, max_degree=g.max_degree(), kappa=kappa,
        index=index.bracket(), violation=violation, predicates=evaluate_predicates(g),
    )
    if violation:
        certificate = is_deletion_minimal(g, kappa, template)
        record.minimal = certificate.minimal
        if certificate.minimal:
            report = lemma_audit(g, kappa, assume_minimal=True)
            record.lemmas = report.to_records()
        logger.warning(f"❌ {record.graph6}: index {record.index} above {rule.value} = {kappa}")
    return record


def _hunt_task(args) -> HuntRecord:
    g, rule, node_budget = args
    return hunt_one(g, rule, node_budget)


def hunt_counterexamples(
    cfg: HuntConfig,
    corpus: Optional[Iterable[Graph]] = None,
    progress: bool = False,
) -> HuntReport:
    """
    Sweep a class and report graphs whose index exceeds the rule

    Args:
        cfg: Sweep bounds, rule, class filter and worker count
        corpus: Graphs to scan instead of the enumeration; the class filter
            and the n bounds still apply
        progress: tqdm bar on stderr

    Returns:
        HuntReport with records in input order
    """
    graph_class = GraphClass(cfg.graph_class)
    rule = KappaRule(cfg.rule)
    if corpus is None:
        graphs = enumerate_graphs(
            cfg.n_max, graph_class, connected_only=cfg.connected_only,
            n_min=cfg.n_min, allow_large=cfg.allow_large, progress=progress,
        )
    else:
        graphs = (
            g for g in corpus
            if cfg.n_min <= g.n <= cfg.n_max
            and (g.is_connected() or not cfg.connected_only)
            and in_class(g, graph_class)
        )
    tasks = [(g, rule, cfg.node_budget) for g in graphs if g.m >= 1]
    logger.info(f"🎯 Hunting over {len(tasks)} graph(s), class={graph_class.value}, rule={rule.value}")

    report = HuntReport(rule=rule.value, graph_class=graph_class.value)
    bar = tqdm(total=len(tasks), desc=f"hunt {rule.value}", disable=not progress, leave=False)
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            for record in pool.map(_hunt_task, tasks, chunksize=SearchConstants.HUNT_CHUNK_SIZE):
                report.records.append(record)
                bar.update()
    else:
        for task in tasks:
            report.records.append(_hunt_task(task))
            bar.update()
    bar.close()

    logger.info(
        f"📊 Hunt done: {report.scanned} scanned, {len(report.violations())} violation(s), "
        f"{len(report.unknowns())} unknown"
    )
    return report


def nmad4_scheme_breaches(graphs: Iterable[Graph]) -> List[Graph]:
    """
    Graphs with mad < 4 that pass every applicable structural lemma at
    kappa = Delta + 2 and still end with an all-nonnegative ledger

    The charge total 2m - 4n is negative whenever mad < 4, so the list is
    expected to stay empty.
    """
    breaches = []
    for g in graphs:
        if g.m == 0 or max_average_degree(g) >= 4:
            continue
        kappa = g.max_degree() + 2
        if not lemma_audit(g, kappa, coloring_checks=False).all_hold:
            continue
        ledger = discharge_mad4(g, kappa)
        if ledger.all_nonnegative():
            logger.warning(f"❌ Discharging scheme breach on {graph6_of(g)}")
            breaches.append(g)
    return breaches
