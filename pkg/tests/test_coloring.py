"""
Test coloring-engine: colorings, dichromatic paths, candidate/valid colors,
acyclicity reports and the coloring file format
Run: pytest tests/test_coloring.py -v
"""

import numpy as np
import pytest

from core.coloring import (
    EdgeColoring,
    candidate_colors,
    exists_alternating_path,
    exists_critical_path,
    free_colors,
    is_acyclic_so_far,
    is_proper,
    lift_coloring,
    maximal_dichromatic_path,
    missing_edge_w_set,
    properness_violation,
    swap_colors,
    upsilon,
    used_colors,
    valid_colors,
    verify_acyclic,
    w_set,
)
from core.coloring_io import parse_coloring, write_coloring
from core.errors import (
    ColoringError,
    ColoringParseError,
    ImproperColoringError,
    NonAcyclicColoringError,
    PartialColoringError,
)
from solver.exact_solver import sample_acyclic_coloring


@pytest.mark.unit
class TestEdgeColoring:
    """The coloring container"""

    def test_empty(self):
        """All edges start uncolored"""
        c = EdgeColoring.empty(3, 4)
        assert c.colors == (0, 0, 0, 0)
        assert c.uncolored_edges() == [0, 1, 2, 3]
        assert not c.is_total()

    def test_assign_and_unassign(self):
        """assign/unassign move an edge between the two states"""
        c = EdgeColoring.empty(3, 2)
        c.assign(1, 3)
        assert c.is_colored(1) and c.color(1) == 3
        assert c.colored_edges() == [1]
        c.unassign(1)
        assert not c.is_colored(1)

    def test_assign_out_of_range(self):
        """Colors live in 1..kappa"""
        c = EdgeColoring.empty(3, 2)
        with pytest.raises(ColoringError):
            c.assign(0, 4)
        with pytest.raises(ColoringError):
            c.assign(0, 0)

    def test_kappa_must_be_positive(self):
        """kappa >= 1"""
        with pytest.raises(ColoringError):
            EdgeColoring(0, [])

    def test_copy_is_independent(self):
        """Mutating a copy leaves the original alone"""
        c = EdgeColoring(3, [1, 2])
        d = c.copy()
        d.assign(0, 3)
        assert c.color(0) == 1

    def test_with_kappa(self):
        """Same colors under a larger palette"""
        c = EdgeColoring(3, [1, 2]).with_kappa(5)
        assert c.kappa == 5 and c.colors == (1, 2)


@pytest.mark.unit
class TestColorSets:
    """U, C, upsilon and W on C4 (ids 0:01 1:12 2:23 3:30)"""

    def test_used_and_free(self, c4):
        """U(v) and its complement"""
        c = EdgeColoring(3, [1, 2, 1, 0])
        assert used_colors(c, c4, 0) == {1}
        assert used_colors(c, c4, 1) == {1, 2}
        assert free_colors(c, c4, 0) == {2, 3}

    def test_upsilon(self, c4):
        """upsilon(u, v) = U(v) minus the color of uv"""
        c = EdgeColoring(3, [1, 2, 1, 0])
        assert upsilon(c, c4, 0, 1) == {2}
        assert upsilon(c, c4, 2, 1) == {1}

    def test_upsilon_needs_colored_edge(self, c4):
        """uv must be colored"""
        c = EdgeColoring(3, [1, 2, 1, 0])
        with pytest.raises(ColoringError):
            upsilon(c, c4, 3, 0)

    def test_w_set(self, c4):
        """Neighbors x of u whose ux color lies in upsilon(u, v)"""
        c = EdgeColoring(3, [1, 2, 1, 3])
        # upsilon(0,1) = U(1) - {1} = {2}; edges at 0 carry 1 and 3
        assert w_set(c, c4, 0, 1) == frozenset()
        # upsilon(1,2) = U(2) - {2} = {1}; edge 10 carries 1
        assert w_set(c, c4, 1, 2) == {0}

    def test_missing_edge_w_set(self, c4):
        """With uv uncolored, upsilon is all of U(v)"""
        c = EdgeColoring(3, [1, 2, 1, 0])
        assert missing_edge_w_set(c, c4, 3, 0) == {2}
        with pytest.raises(ColoringError):
            missing_edge_w_set(c, c4, 0, 1)


@pytest.mark.unit
class TestDichromaticPaths:
    """Maximal paths, critical and alternating paths"""

    def test_open_path_from_endpoint(self, c4):
        """Listed from v when v is an end"""
        c = EdgeColoring(3, [1, 2, 1, 3])
        q = maximal_dichromatic_path(c, c4, 0, 1, 2)
        assert not q.closed
        assert q.vertices == (0, 1, 2, 3)
        assert q.edges == (0, 1, 2)
        assert q.length == 3

    def test_closed_component(self, c4):
        """A bichromatic cycle comes back closed"""
        c = EdgeColoring(2, [1, 2, 1, 2])
        q = maximal_dichromatic_path(c, c4, 0, 1, 2)
        assert q.closed
        assert sorted(q.edges) == [0, 1, 2, 3]
        assert q.vertices[0] == 0

    def test_same_component_from_every_vertex(self, c4):
        """Uniqueness: any vertex of the path yields the same edge set"""
        c = EdgeColoring(3, [1, 2, 1, 3])
        ref = set(maximal_dichromatic_path(c, c4, 0, 1, 2).edges)
        for x in (1, 2, 3):
            assert set(maximal_dichromatic_path(c, c4, x, 1, 2).edges) == ref

    def test_improper_and_trivial_components(self, c4):
        """Improper input raises; a vertex seeing neither color gives the trivial path"""
        c = EdgeColoring(3, [1, 1, 0, 0])
        with pytest.raises(ImproperColoringError):
            maximal_dichromatic_path(c, c4, 1, 1, 2)
        c = EdgeColoring(3, [1, 0, 0, 0])
        q = maximal_dichromatic_path(c, c4, 2, 1, 2)
        assert q.edges == () and q.vertices == (2,)

    def test_equal_colors_rejected(self, c4):
        """alpha must differ from beta"""
        c = EdgeColoring(3, [1, 2, 1, 3])
        with pytest.raises(ColoringError):
            maximal_dichromatic_path(c, c4, 0, 1, 1)

    def test_critical_path(self, c4):
        """1-2-1 path from 0 to 3 is (1,2)-critical"""
        c = EdgeColoring(3, [1, 2, 1, 0])
        assert exists_critical_path(c, c4, 1, 2, 0, 3)
        assert exists_critical_path(c, c4, 1, 2, 3, 0)
        assert not exists_critical_path(c, c4, 2, 1, 0, 3)

    def test_alternating_path(self, p4):
        """Leaves u on alpha, reaches v on beta"""
        c = EdgeColoring(3, [1, 2, 1])
        assert exists_alternating_path(c, p4, 1, 2, 0, 2)
        assert not exists_alternating_path(c, p4, 1, 2, 0, 3)


@pytest.mark.unit
class TestCandidateAndValid:
    """Candidate versus valid colors"""

    def test_candidates(self, c4):
        """Colors on adjacent edges are excluded"""
        c = EdgeColoring(3, [1, 2, 1, 0])
        assert candidate_colors(c, c4, 3) == {2, 3}

    def test_valid_excludes_cycle_closing_color(self, c4):
        """2 on edge 30 would close a (1,2) cycle"""
        c = EdgeColoring(3, [1, 2, 1, 0])
        assert valid_colors(c, c4, 3) == {3}

    def test_colored_edge_has_no_candidates(self, c4):
        """Asking about a colored edge is an error"""
        c = EdgeColoring(3, [1, 2, 1, 3])
        with pytest.raises(ColoringError):
            candidate_colors(c, c4, 0)

    def test_valid_rejects_cyclic_input(self):
        """The rest of the coloring must already be acyclic"""
        from core.graph import Graph
        g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
        c = EdgeColoring(3, [1, 2, 1, 2, 0])
        with pytest.raises(NonAcyclicColoringError):
            valid_colors(c, g, 4)


@pytest.mark.unit
class TestVerification:
    """Properness and acyclicity reports"""

    def test_acyclic_c4(self, c4):
        """1,2,1,3 is acyclic"""
        report = verify_acyclic(EdgeColoring(3, [1, 2, 1, 3]), c4)
        assert report
        assert report.describe() == "acyclic"

    def test_bichromatic_cycle_reported(self, c4):
        """1,2,1,2 is a bichromatic 4-cycle"""
        report = verify_acyclic(EdgeColoring(2, [1, 2, 1, 2]), c4)
        assert not report
        assert sorted(report.cycle) == [0, 1, 2, 3]
        assert set(report.cycle_colors) == {1, 2}

    def test_improper_reported(self, c4):
        """Repeated color at vertex 1"""
        c = EdgeColoring(3, [1, 1, 2, 3])
        assert properness_violation(c, c4) == (1, 1)
        assert not is_proper(c, c4)
        report = verify_acyclic(c, c4)
        assert report.improper_at == (1, 1)

    def test_partial_needs_so_far(self, c4):
        """verify_acyclic wants a total coloring"""
        c = EdgeColoring(3, [1, 2, 0, 0])
        with pytest.raises(PartialColoringError):
            verify_acyclic(c, c4)
        assert is_acyclic_so_far(c, c4)

    def test_length_mismatch(self, c4):
        """Coloring must fit the graph"""
        with pytest.raises(ColoringError):
            verify_acyclic(EdgeColoring(3, [1, 2]), c4)

    def test_swap_and_lift(self, c4):
        """swap exchanges two colors; lift re-indexes onto the parent"""
        c = EdgeColoring(3, [1, 2, 1, 3])
        swapped = swap_colors(c, c4, 0, 1)
        assert swapped.colors == (2, 1, 1, 3)
        sub = c4.delete_edge(1)
        lifted = lift_coloring(EdgeColoring(3, [1, 2, 3]), sub.edge_map, c4.m)
        assert lifted.colors == (1, 0, 2, 3)

    def test_oracle_agreement(self, rng, random_graph, acyclic_oracle):
        """verify_acyclic agrees with the every-cycle-sees-three-colors oracle"""
        for _ in range(200):
            g = random_graph(rng, n_max=6)
            if g.m == 0:
                continue
            kappa = int(rng.integers(2, 5))
            c = EdgeColoring(kappa, [int(x) for x in rng.integers(1, kappa + 1, size=g.m)])
            assert bool(verify_acyclic(c, g)) == acyclic_oracle(c, g)

    def test_solver_colorings_pass_oracle(self, rng, random_graph, acyclic_oracle):
        """Sampled acyclic colorings satisfy the oracle"""
        for _ in range(30):
            g = random_graph(rng, n_max=6)
            if g.m == 0:
                continue
            c = sample_acyclic_coloring(g, g.max_degree() + 2, rng)
            assert c is not None
            assert acyclic_oracle(c, g)


@pytest.mark.unit
class TestPathUniqueness:
    """Maximal paths are unique and queries are idempotent"""

    def test_random_queries(self, rng, random_graph):
        """Every vertex of a component returns the same component, repeatedly"""
        checked = 0
        for _ in range(40):
            g = random_graph(rng, n_max=7, p=0.6)
            if g.m == 0:
                continue
            c = sample_acyclic_coloring(g, g.max_degree() + 2, rng)
            for e in np.nonzero(rng.random(g.m) < 0.3)[0]:
                c.unassign(int(e))
            for v in g.vertices():
                present = sorted(used_colors(c, g, v))
                for i, a in enumerate(present):
                    for b in present[i + 1:]:
                        q = maximal_dichromatic_path(c, g, v, a, b)
                        assert maximal_dichromatic_path(c, g, v, a, b) == q
                        assert not q.closed
                        for x in q.vertices:
                            assert set(maximal_dichromatic_path(c, g, x, a, b).edges) == set(q.edges)
                        checked += 1
        assert checked > 0


def _partial_colorings(rng, random_graph, count: int, uncolor: float = 0.3):
    """Random acyclic colorings with a random share of edges uncolored"""
    made = 0
    while made < count:
        g = random_graph(rng, n_max=7, p=0.6)
        if g.m == 0:
            continue
        c = sample_acyclic_coloring(g, g.max_degree() + 2, rng)
        for e in np.nonzero(rng.random(g.m) < uncolor)[0]:
            c.unassign(int(e))
        made += 1
        yield g, c


@pytest.mark.unit
class TestSetConsistency:
    """Definitions that must agree with each other on any partial coloring"""

    def test_critical_and_alternating_exclusive(self, rng, random_graph):
        """Both path kinds leave u on alpha; they end at v on different colors"""
        checked = 0
        for g, c in _partial_colorings(rng, random_graph, 30):
            for u in g.vertices():
                for v in g.vertices():
                    if u == v:
                        continue
                    for a in range(1, c.kappa + 1):
                        for b in range(1, c.kappa + 1):
                            if a == b:
                                continue
                            critical = exists_critical_path(c, g, a, b, u, v)
                            alternating = exists_alternating_path(c, g, a, b, u, v)
                            assert not (critical and alternating), (g.edges, c.colors, a, b, u, v)
                            checked += 1
        assert checked > 0

    def test_w_set_matches_upsilon(self, rng, random_graph):
        """x is in W(uv) exactly when the color of ux is in upsilon(uv)"""
        checked = 0
        for g, c in _partial_colorings(rng, random_graph, 60):
            for e, (a, b) in enumerate(g.edges):
                if not c.is_colored(e):
                    continue
                for u, v in ((a, b), (b, a)):
                    ups = upsilon(c, g, u, v)
                    assert ups == used_colors(c, g, v) - {c.color(e)}
                    w = w_set(c, g, u, v)
                    for x in g.neighbors(u):
                        f = g.edge_id(u, x)
                        expected = c.is_colored(f) and c.color(f) in ups
                        assert (x in w) == expected
                    assert v not in w
                    checked += 1
        assert checked > 0

    def test_valid_within_candidates(self, rng, random_graph):
        """valid <= candidate <= free(u) & free(v) for every uncolored edge"""
        checked = 0
        for g, c in _partial_colorings(rng, random_graph, 60, uncolor=0.5):
            for e, (u, v) in enumerate(g.edges):
                if c.is_colored(e):
                    continue
                candidates = candidate_colors(c, g, e)
                assert valid_colors(c, g, e) <= candidates
                assert candidates == free_colors(c, g, u) & free_colors(c, g, v)
                checked += 1
        assert checked > 0


@pytest.mark.unit
class TestColoringFile:
    """k-header plus 'u v c' rows"""

    def test_parse_any_order(self, c4):
        """Rows may come in any order and either orientation"""
        c = parse_coloring("k 3\n3 0 3\n1 0 1\n2 1 2\n2 3 1\n", c4)
        assert c.kappa == 3
        assert c.colors == (1, 2, 1, 3)

    def test_missing_rows_are_uncolored(self, c4):
        """An edge with no row stays uncolored"""
        c = parse_coloring("k 3\n0 1 1\n", c4)
        assert c.colors == (1, 0, 0, 0)

    def test_write_then_parse(self, c4):
        """Writer output is ordered by edge id and parses back"""
        c = EdgeColoring(3, [1, 2, 1, 3])
        text = write_coloring(c, c4)
        assert text.decode().splitlines()[0] == "k 3"
        assert parse_coloring(text, c4) == c

    def test_edge_not_in_graph(self, c4):
        """A row for a non-edge"""
        with pytest.raises(ColoringParseError) as exc:
            parse_coloring("k 3\n0 2 1\n", c4)
        assert exc.value.line == 2

    def test_edge_listed_twice(self, c4):
        """Same edge in both orientations"""
        with pytest.raises(ColoringParseError):
            parse_coloring("k 3\n0 1 1\n1 0 2\n", c4)

    def test_color_above_kappa(self, c4):
        """Colors above the header's kappa"""
        with pytest.raises(ColoringParseError):
            parse_coloring("k 2\n0 1 3\n", c4)

    def test_missing_header(self, c4):
        """First non-comment line must be the header"""
        with pytest.raises(ColoringParseError):
            parse_coloring("0 1 1\n", c4)
