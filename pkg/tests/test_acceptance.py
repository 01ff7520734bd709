"""
Theorem-level acceptance sweeps
Run: pytest tests/test_acceptance.py -v -m acceptance

These enumerate every small graph of a class and compare the exact index
against the bound; they take minutes, not seconds.
"""

import time

import networkx as nx
import numpy as np
import pytest

from config.schema import Fallback, GraphClass, HeuristicConfig, HuntConfig, KappaRule, SolverConfig
from core.coloring import EdgeColoring, lift_coloring, maximal_dichromatic_path, used_colors, verify_acyclic
from core.families import Families
from lab.discharging import discharge_mad4
from lab.enumeration import enumerate_graphs
from lab.hunt import hunt_counterexamples
from lab.lemma_audit import lemma_audit
from lab.mad import max_average_degree
from solver.exact_solver import (
    acyclic_chromatic_index,
    check_no_valid_extension,
    decide_colorable,
    is_deletion_minimal,
    sample_acyclic_coloring,
)
from solver.heuristic_colorer import color_with_restarts

pytestmark = [pytest.mark.acceptance, pytest.mark.slow]

MINIMAL_INSTANCES = [
    ("C4", Families.cycle(4), 2),
    ("K4", Families.complete(4), 4),
    ("K3,3", Families.complete_bipartite(3, 3), 4),
]


class TestNamedIndices:
    """K4 and K3,3"""

    @pytest.mark.parametrize("graph", [Families.complete(4), Families.complete_bipartite(3, 3)])
    def test_index_five(self, graph):
        """Index 5, fast, with a coloring that re-verifies"""
        start = time.perf_counter()
        result = acyclic_chromatic_index(graph)
        assert time.perf_counter() - start < 5
        assert result.value == 5
        assert verify_acyclic(result.coloring, graph)


class TestClassSweeps:
    """Every graph of a class stays within its bound"""

    def _clean(self, cfg: HuntConfig):
        report = hunt_counterexamples(cfg)
        assert report.scanned > 0
        assert report.violations() == []
        assert report.unknowns() == []
        return report

    def test_delta4_non_regular_within_delta_plus_2(self):
        self._clean(HuntConfig(n_max=7, rule=KappaRule.DELTA_PLUS_2, graph_class=GraphClass.DELTA4))

    def test_subcubic_non_regular_within_delta_plus_1(self):
        self._clean(HuntConfig(n_max=7, rule=KappaRule.DELTA_PLUS_1, graph_class=GraphClass.SUBCUBIC))

    def test_mad_below_four_within_delta_plus_2(self):
        self._clean(HuntConfig(n_max=6, rule=KappaRule.DELTA_PLUS_2, graph_class=GraphClass.MAD4))

    def test_independent_three_plus_vertices_at_delta(self):
        """Index is exactly Delta: the rule is met and Delta is a lower bound"""
        self._clean(HuntConfig(
            n_max=7, rule=KappaRule.DELTA, graph_class=GraphClass.THREE_PLUS_INDEPENDENT,
        ))

    def test_planar_triangle_disjoint_within_delta_plus_3(self):
        """Planarity is checked here only; the class filter is combinatorial"""
        corpus = [
            g for g in enumerate_graphs(7, GraphClass.NO_INTERSECT)
            if nx.check_planarity(g.to_networkx())[0]
        ]
        report = hunt_counterexamples(
            HuntConfig(n_max=7, rule=KappaRule.DELTA_PLUS_3, graph_class=GraphClass.NO_INTERSECT),
            corpus=corpus,
        )
        assert report.scanned == len([g for g in corpus if g.m])
        assert report.violations() == []


class TestMinimalInstances:
    """Certified minimal graphs and what minimality implies"""

    @pytest.mark.parametrize("name,graph,kappa", MINIMAL_INSTANCES)
    def test_certified_and_audited(self, name, graph, kappa):
        cert = is_deletion_minimal(graph, kappa)
        assert cert.minimal is True, name
        report = lemma_audit(graph, kappa, assume_minimal=True)
        assert report.entry("kappa=2").holds and report.entry("kappa=2").applicable
        assert report.entry("DegreeSum").holds and report.entry("DegreeSum").applicable
        assert report.all_hold, [e.lemma_id for e in report.violations()]

    @pytest.mark.parametrize("name,graph,kappa", MINIMAL_INSTANCES)
    def test_no_extension_under_sampling(self, name, graph, kappa):
        """100 sampled colorings of each G-uv leave uv without a valid color"""
        for e, (u, v) in enumerate(graph.edges):
            sub = graph.delete_edge(e)
            for sample in range(100):
                rng = np.random.default_rng([e, sample])
                c_sub = sample_acyclic_coloring(sub.graph, kappa, rng)
                assert c_sub is not None
                assert check_no_valid_extension(graph, e, c_sub, kappa)
                c = lift_coloring(c_sub, sub.edge_map, graph.m)
                if not used_colors(c, graph, u) & used_colors(c, graph, v):
                    assert graph.degree(u) + graph.degree(v) == kappa + 2, name


class TestEngineProperties:
    """Randomized agreement and uniqueness checks"""

    def test_verifier_oracle_agreement(self, rng, random_graph, acyclic_oracle):
        """1000 random total colorings"""
        done = 0
        while done < 1000:
            g = random_graph(rng)
            if g.m == 0:
                continue
            kappa = int(rng.integers(2, g.max_degree() + 3))
            c = EdgeColoring(kappa, [int(x) for x in rng.integers(1, kappa + 1, size=g.m)])
            assert bool(verify_acyclic(c, g)) == acyclic_oracle(c, g)
            done += 1

    def test_path_queries(self, rng, random_graph):
        """10000 (coloring, vertex, color pair) queries"""
        done = 0
        while done < 10_000:
            g = random_graph(rng, p=0.6)
            if g.m == 0:
                continue
            c = sample_acyclic_coloring(g, g.max_degree() + 2, rng)
            v = int(rng.integers(g.n))
            a, b = (int(x) for x in rng.choice(np.arange(1, c.kappa + 1), size=2, replace=False))
            q = maximal_dichromatic_path(c, g, v, a, b)
            assert maximal_dichromatic_path(c, g, v, a, b) == q
            for x in q.vertices:
                assert set(maximal_dichromatic_path(c, g, x, a, b).edges) == set(q.edges)
            done += 1

    def test_mad_against_subsets(self, mad_oracle):
        """Every connected graph up to eight vertices"""
        for g in enumerate_graphs(8):
            assert max_average_degree(g) == mad_oracle(g)

    def test_charge_conservation(self):
        for g in enumerate_graphs(6):
            if g.m == 0:
                continue
            ledger = discharge_mad4(g, g.max_degree() + 2)
            assert ledger.total_final == 2 * g.m - 4 * g.n


class TestHeuristicCoverage:
    """Greedy + repair against the exact solver on the class sweeps"""

    @pytest.mark.parametrize("graph_class,rule,n_max", [
        (GraphClass.DELTA4, KappaRule.DELTA_PLUS_2, 7),
        (GraphClass.SUBCUBIC, KappaRule.DELTA_PLUS_1, 7),
        (GraphClass.MAD4, KappaRule.DELTA_PLUS_2, 6),
    ])
    def test_fallback_matches_exact_and_greedy_mostly_succeeds(self, graph_class, rule, n_max):
        """Fallback agrees everywhere; alone it reaches 90% at Delta+2"""
        graphs = [g for g in enumerate_graphs(n_max, graph_class) if g.m]
        assert graphs
        alone = 0
        for g in graphs:
            kappa = rule.kappa_for(g.max_degree())
            exact = decide_colorable(g, SolverConfig(kappa=kappa))
            with_fallback = color_with_restarts(g, HeuristicConfig(kappa=kappa, fallback=Fallback.EXACT))
            assert with_fallback.colorable == exact.colorable, g.edges
            if color_with_restarts(g, HeuristicConfig(kappa=kappa)).colorable:
                alone += 1
        if rule is KappaRule.DELTA_PLUS_2:
            assert alone >= 0.9 * len(graphs)
