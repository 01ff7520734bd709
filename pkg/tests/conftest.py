"""
Pytest configuration and fixtures
"""
import pytest
import sys
from fractions import Fraction
from itertools import combinations
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

import networkx as nx
import numpy as np

from core.families import Families
from core.graph import Graph


# ==================== GRAPHS ====================
@pytest.fixture
def k4():
    return Families.complete(4)


@pytest.fixture
def k33():
    return Families.complete_bipartite(3, 3)


@pytest.fixture
def c4():
    """C4 with edge ids 0:01 1:12 2:23 3:30"""
    return Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def c5():
    return Graph(5, [(i, (i + 1) % 5) for i in range(5)])


@pytest.fixture
def c6():
    return Graph(6, [(i, (i + 1) % 6) for i in range(6)])


@pytest.fixture
def p3():
    """Path on three vertices: 0-1-2"""
    return Graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def p4():
    return Graph(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def star4():
    """K_{1,4}, center 0"""
    return Families.star(4)


@pytest.fixture
def bowtie():
    """Two triangles sharing vertex 0"""
    return Graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])


@pytest.fixture
def k4_pendant():
    """K4 plus a leaf 4 on vertex 0"""
    return Families.pendant_attach(Families.complete(4), 0)


@pytest.fixture
def rng():
    """Seeded generator for randomized property checks"""
    return np.random.default_rng(20261019)


# ==================== ORACLES ====================
def _acyclic_by_cycles(c, g) -> bool:
    """Proper, total, and every cycle of g sees at least three colors"""
    colors = c.colors
    if any(x == 0 for x in colors):
        return False
    for v in g.vertices():
        seen = [colors[e] for e in g.incident_edges(v)]
        if len(seen) != len(set(seen)):
            return False
    for cycle in nx.simple_cycles(g.to_networkx()):
        used = {colors[g.edge_id(cycle[i], cycle[(i + 1) % len(cycle)])] for i in range(len(cycle))}
        if len(used) < 3:
            return False
    return True


def _mad_by_subsets(g) -> Fraction:
    best = Fraction(0)
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            chosen = set(subset)
            m = sum(1 for u, v in g.edges if u in chosen and v in chosen)
            best = max(best, Fraction(2 * m, size))
    return best


@pytest.fixture
def acyclic_oracle():
    """Brute-force acyclicity check over all cycles"""
    return _acyclic_by_cycles


@pytest.fixture
def mad_oracle():
    """Brute-force mad over all vertex subsets"""
    return _mad_by_subsets


def _random_graph(rng, n_max: int = 7, p: float = 0.5) -> Graph:
    n = int(rng.integers(2, n_max + 1))
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


@pytest.fixture
def random_graph():
    """Factory: random simple graph on 2..n_max vertices"""
    return _random_graph
