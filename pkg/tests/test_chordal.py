"""
Хордальность, максимальные клики и порядок листьев; networkx - независимый эталон.
"""
import networkx as nx
from hypothesis import given, settings

from chordal.cliques import free_and_internal_vertices, leaf_branches, leaf_order, maximal_cliques
from chordal.recognition import is_chordal, is_chordless_cycle, peo_violation
from graphs.families import complete_graph, cycle_graph, flower_graph, path_graph, shared_edge_triangles, star_graph

from .strategies import simple_graphs, to_networkx


def facets(*sets):
    return tuple(frozenset(s) for s in sets)


class TestChordality:
    def test_strip(self, fixture_graph):
        result = is_chordal(fixture_graph("strip"))
        assert result.is_chordal
        assert peo_violation(fixture_graph("strip"), list(result.peo)) is None

    def test_sun(self, fixture_graph):
        assert is_chordal(fixture_graph("sun"))

    def test_four_cycle(self, fixture_graph):
        g = fixture_graph("c4")
        result = is_chordal(g)
        assert not result
        assert sorted(result.cycle) == [1, 2, 3, 4]
        assert is_chordless_cycle(g, result.cycle)

    @settings(max_examples=200, deadline=None)
    @given(simple_graphs(max_n=9))
    def test_agrees_with_networkx(self, g):
        result = is_chordal(g)
        assert result.is_chordal == nx.is_chordal(to_networkx(g))
        if result.is_chordal:
            assert peo_violation(g, list(result.peo)) is None
        else:
            assert is_chordless_cycle(g, result.cycle)


class TestMaximalCliques:
    def test_strip(self, fixture_graph):
        assert maximal_cliques(fixture_graph("strip")).facets == facets({1, 2, 3}, {2, 3, 4}, {3, 4, 5})

    def test_sun(self, fixture_graph):
        cc = maximal_cliques(fixture_graph("sun"))
        assert cc.facets == facets({1, 2, 3}, {2, 3, 5}, {2, 4, 5}, {3, 5, 6})
        assert cc.size == 4

    def test_star(self):
        assert maximal_cliques(star_graph(3)).facets == facets({1, 2}, {1, 3}, {1, 4})

    def test_non_chordal_graph(self):
        cc = maximal_cliques(cycle_graph(5))
        assert cc.size == 5
        assert not cc.is_quasi_forest
        assert cc.ordered_facets() == ()

    @settings(max_examples=200, deadline=None)
    @given(simple_graphs(max_n=9))
    def test_agrees_with_networkx(self, g):
        cc = maximal_cliques(g)
        expected = {frozenset(c) for c in nx.find_cliques(to_networkx(g))}
        assert set(cc.facets) == expected
        assert len(cc.facets) == len(expected)
        assert list(cc.facets) == sorted(cc.facets, key=sorted)

    @settings(max_examples=100, deadline=None)
    @given(simple_graphs(max_n=9))
    def test_facets_form_antichain(self, g):
        masks = maximal_cliques(g).facet_masks
        for i, a in enumerate(masks):
            for j, b in enumerate(masks):
                assert i == j or a & b != a


class TestLeafOrder:
    def test_strip(self, fixture_graph):
        cc = maximal_cliques(fixture_graph("strip"))
        assert cc.is_quasi_forest
        assert leaf_branches(list(cc.facets)) is not None
        assert leaf_branches(list(cc.ordered_facets())) is not None

    def test_single_facet(self):
        cc = maximal_cliques(complete_graph(4))
        assert cc.ordered_facets() == facets({1, 2, 3, 4})
        assert cc.branches == (None,)

    def test_shared_edge_either_order(self):
        f1, f2 = facets({1, 2, 3}, {2, 3, 4})
        assert leaf_branches([f1, f2]) == [None, 0]
        assert leaf_branches([f2, f1]) == [None, 0]

    @settings(max_examples=200, deadline=None)
    @given(simple_graphs(max_n=9))
    def test_quasi_forest_iff_chordal(self, g):
        """Δ(G) - квазилес тогда и только тогда, когда G хордален."""
        cc = maximal_cliques(g)
        found = leaf_order(cc.facets).order is not None
        assert found == nx.is_chordal(to_networkx(g))
        assert cc.is_quasi_forest == found


class TestFreeVertices:
    def test_complete_graph(self):
        data = free_and_internal_vertices(complete_graph(5))
        assert data.f == 5
        assert data.iv == 0

    def test_flower(self):
        data = free_and_internal_vertices(flower_graph(3, 0))
        assert data.cdeg[1] == 3
        assert data.internal == frozenset({1})
        assert data.f == 6

    def test_path(self):
        data = free_and_internal_vertices(path_graph(3))
        assert data.free == frozenset({1, 3})
        assert data.cdeg[2] == 2

    def test_shared_edge(self):
        assert free_and_internal_vertices(shared_edge_triangles()).internal == frozenset({2, 3})

    @settings(max_examples=100, deadline=None)
    @given(simple_graphs(max_n=9))
    def test_counts(self, g):
        cc = maximal_cliques(g)
        data = free_and_internal_vertices(g, cc)
        assert data.f + data.iv == g.n
        assert sum(data.cdeg.values()) == sum(len(f) for f in cc.facets)
