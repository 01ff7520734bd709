"""
Structure lab: mad, vertex classes, lemma audits, discharging, class
predicates, enumeration and the counterexample hunt
"""

from .discharging import ChargeLedger, DischargeRules, discharge, discharge_mad4, discharge_no_intersect
from .enumeration import enumerate_graphs, in_class
from .hunt import HuntRecord, HuntReport, hunt_counterexamples, nmad4_scheme_breaches
from .lemma_audit import LemmaEntry, LemmaReport, LemmaStatus, lemma_audit
from .mad import mad_witness, max_average_degree
from .predicates import PredicateResult, evaluate_predicates, label_with_predicates
from .vertex_classes import VertexClass, VertexKind, classify_vertices

__all__ = [
    "ChargeLedger",
    "DischargeRules",
    "discharge",
    "discharge_mad4",
    "discharge_no_intersect",
    "enumerate_graphs",
    "in_class",
    "HuntRecord",
    "HuntReport",
    "hunt_counterexamples",
    "nmad4_scheme_breaches",
    "LemmaEntry",
    "LemmaReport",
    "LemmaStatus",
    "lemma_audit",
    "mad_witness",
    "max_average_degree",
    "PredicateResult",
    "evaluate_predicates",
    "label_with_predicates",
    "VertexClass",
    "VertexKind",
    "classify_vertices",
]
