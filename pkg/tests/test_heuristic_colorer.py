"""
Test the greedy + repair colorer
Run: pytest tests/test_heuristic_colorer.py -v
"""

import numpy as np
import pytest

from config.schema import Fallback, HeuristicConfig
from core.coloring import EdgeColoring, is_acyclic_so_far
from core.families import Families
from core.graph import Graph
from core.models import SolveStatus
from solver.heuristic_colorer import color_with_restarts, greedy_color, local_repair


@pytest.mark.unit
class TestGreedy:
    """Single pass without repair"""

    def test_stall_reports_edge(self, c4):
        """On C4 with two colors the closing edge has no valid color"""
        result = greedy_color(c4, HeuristicConfig(kappa=2), order=[0, 1, 2, 3])
        assert result.status == SolveStatus.STALLED
        assert result.stalled_edge == 3
        assert result.coloring.colors == (1, 2, 1, 0)

    def test_success_is_verified(self, c4, acyclic_oracle):
        result = greedy_color(c4, HeuristicConfig(kappa=3))
        assert result.colorable
        assert acyclic_oracle(result.coloring, c4)

    def test_below_max_degree(self, star4):
        assert greedy_color(star4, HeuristicConfig(kappa=3)).status == SolveStatus.NOT_COLORABLE


@pytest.mark.unit
class TestLocalRepair:
    """Repair moves around a stalled edge"""

    def test_direct_color_when_one_exists(self, c4):
        """The input is left alone; the copy colors the edge"""
        c = EdgeColoring(3, [1, 2, 1, 0])
        fixed = local_repair(c4, c, 3, HeuristicConfig(kappa=3))
        assert fixed.color(3) == 3
        assert c.color(3) == 0

    def test_zero_budget(self, c4):
        c = EdgeColoring(3, [1, 2, 1, 0])
        assert local_repair(c4, c, 3, HeuristicConfig(kappa=3, moves_per_stall=0)) is None

    def test_break_critical_path(self, c4):
        """With two colors the blocking path loses its far edge"""
        c = EdgeColoring(2, [1, 2, 1, 0])
        fixed = local_repair(c4, c, 3, HeuristicConfig(kappa=2))
        assert fixed.color(3) == 2
        assert not fixed.is_colored(0)

    def test_shuffled_moves_follow_the_stream(self, k4):
        """Move order comes from the rng; the same stream repeats the repair"""
        c = EdgeColoring(4, [1, 2, 3, 3, 4, 0])

        def repaired(stream):
            fixed = local_repair(k4, c, 5, HeuristicConfig(kappa=4), rng=np.random.default_rng(stream))
            return None if fixed is None else fixed.colors

        assert repaired([9, 1]) == repaired([9, 1])
        fixed = local_repair(k4, c, 5, HeuristicConfig(kappa=4), rng=np.random.default_rng([9, 1]))
        if fixed is not None:
            assert fixed.is_colored(5)
            assert is_acyclic_so_far(fixed, k4)


@pytest.mark.unit
class TestRestarts:
    """color_with_restarts"""

    def test_k4_at_five(self, k4, acyclic_oracle):
        result = color_with_restarts(k4, HeuristicConfig(kappa=5, seed=3))
        assert result.colorable
        assert result.restart_index is not None
        assert acyclic_oracle(result.coloring, k4)

    def test_deterministic_per_seed(self, k33):
        """Same graph and config, same coloring"""
        cfg = HeuristicConfig(kappa=6, seed=42)
        first = color_with_restarts(k33, cfg)
        second = color_with_restarts(k33, cfg)
        assert first.status == second.status
        if first.colorable:
            assert first.coloring.colors == second.coloring.colors

    def test_impossible_kappa_stalls(self, k4):
        """Below the index every pass stalls; no fallback means STALLED"""
        result = color_with_restarts(k4, HeuristicConfig(kappa=4, restarts=2, moves_per_stall=4))
        assert result.status == SolveStatus.STALLED
        assert result.stalled_edge is not None

    def test_exact_fallback_decides(self, k4):
        """The exact fallback turns a stall into a verdict"""
        cfg = HeuristicConfig(kappa=4, restarts=1, moves_per_stall=2, fallback=Fallback.EXACT)
        result = color_with_restarts(k4, cfg)
        assert result.status == SolveStatus.NOT_COLORABLE
        assert result.method == "exact-fallback"

    def test_below_max_degree(self, star4):
        assert color_with_restarts(star4, HeuristicConfig(kappa=3)).status == SolveStatus.NOT_COLORABLE

    def test_edgeless(self):
        result = color_with_restarts(Graph(4), HeuristicConfig(kappa=1))
        assert result.colorable
        assert len(result.coloring) == 0

    def test_successes_pass_the_oracle(self, rng, random_graph, acyclic_oracle):
        """Whatever the heuristic returns as colorable is acyclic"""
        for seed in range(20):
            g = random_graph(rng)
            if g.m == 0:
                continue
            result = color_with_restarts(g, HeuristicConfig(kappa=g.max_degree() + 2, seed=seed))
            if result.colorable:
                assert acyclic_oracle(result.coloring, g)

    def test_wheel_and_prism(self, acyclic_oracle):
        """Roomy kappa is found on small families"""
        for g in (Families.wheel(7), Families.prism(5)):
            result = color_with_restarts(g, HeuristicConfig(kappa=g.max_degree() + 3, fallback=Fallback.EXACT))
            assert result.colorable
            assert acyclic_oracle(result.coloring, g)
