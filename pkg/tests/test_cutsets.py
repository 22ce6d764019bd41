"""
Минимальные разрезы, семейство C(G) и описания минимальных простых.
"""
import pytest
from hypothesis import given, settings

from chordal.cliques import maximal_cliques
from cutsets.primes import minimal_prime_description
from cutsets.separators import (
    cut_point_sets,
    has_cut_point_property,
    is_cut_set,
    minimal_cut_sets,
    minimal_cut_sets_exhaustive,
    minimal_cut_sets_gbg,
)
from graphs.constructions import merge_at_cutset
from graphs.families import bowtie_graph, complete_graph, path_graph, shared_edge_triangles
from models.errors import NotGeneralizedBlockGraphError, NotInCutPointFamilyError, ResourceLimit
from models.graph import Graph

from .strategies import gbg_graphs, simple_graphs


def sets(*items):
    return [frozenset(s) for s in items]


def triangle_chain() -> Graph:
    """Треугольники {1,2,3}, {3,4,5}, {5,6,7}, склеенные по вершинам."""
    return Graph(7, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5), (5, 6), (5, 7), (6, 7)])


def check_family_split(g: Graph) -> None:
    """Каждый минимальный разрез A лежит в C(G), и любое T ∈ C(G) либо содержит A, либо не пересекает его."""
    family = cut_point_sets(g)
    for a in minimal_cut_sets(g):
        assert a in family
        assert has_cut_point_property(g, a)
        for t in family:
            assert a <= t or not a & t


def check_merged_family(g: Graph) -> None:
    """{T ∈ C(G) : A ∩ T = ∅} = C(G_A); вершины A свободны в G_A и не входят ни в одно T."""
    family = set(cut_point_sets(g))
    for a in minimal_cut_sets(g):
        merged = merge_at_cutset(g, a)
        merged_family = set(cut_point_sets(merged))
        assert {t for t in family if not a & t} == merged_family
        assert all(not a & t for t in merged_family)


class TestMinimalCutSets:
    def test_strip(self, fixture_graph):
        assert minimal_cut_sets(fixture_graph("strip")) == sets({2, 3}, {3, 4})

    def test_sun(self, fixture_graph):
        assert minimal_cut_sets(fixture_graph("sun")) == sets({2, 3}, {2, 5}, {3, 5})

    def test_complete_graph(self):
        assert minimal_cut_sets(complete_graph(5)) == []

    def test_cut_set_predicate(self, fixture_graph):
        g = fixture_graph("strip")
        assert is_cut_set(g, {2, 3})
        assert is_cut_set(g, {2, 3, 5})
        assert not is_cut_set(g, {2})

    @settings(max_examples=150, deadline=None)
    @given(simple_graphs(max_n=8))
    def test_agrees_with_exhaustive_search(self, g):
        assert minimal_cut_sets(g) == minimal_cut_sets_exhaustive(g)

    def test_exhaustive_limit(self):
        with pytest.raises(ResourceLimit):
            minimal_cut_sets_exhaustive(path_graph(6), max_n=5)


class TestGbgFastPath:
    def test_shared_edge(self):
        assert minimal_cut_sets_gbg(shared_edge_triangles()) == sets({2, 3})

    def test_bowtie(self):
        assert minimal_cut_sets_gbg(bowtie_graph()) == sets({3})

    def test_triangle_chain(self):
        assert minimal_cut_sets_gbg(triangle_chain()) == sets({3}, {5})

    def test_rejects_non_gbg(self, fixture_graph):
        with pytest.raises(NotGeneralizedBlockGraphError):
            minimal_cut_sets_gbg(fixture_graph("strip"))

    @settings(max_examples=200, deadline=None)
    @given(gbg_graphs(max_facets=6, max_clique=4, max_n=14))
    def test_agrees_with_general_search(self, g):
        assert minimal_cut_sets_gbg(g, maximal_cliques(g)) == minimal_cut_sets(g)


class TestCutPointFamily:
    def test_strip(self, fixture_graph):
        assert cut_point_sets(fixture_graph("strip")) == sets(set(), {2, 3}, {3, 4})

    def test_triangle(self):
        assert cut_point_sets(complete_graph(3)) == sets(set())

    def test_path(self):
        assert cut_point_sets(path_graph(3)) == sets(set(), {2})

    def test_limit(self):
        with pytest.raises(ResourceLimit):
            cut_point_sets(path_graph(17))
        assert len(cut_point_sets(path_graph(5), max_n=4, allow_large=True)) > 1

    def test_strip_sets_overlap_without_containment(self, fixture_graph):
        a, b = sets({2, 3}, {3, 4})
        family = cut_point_sets(fixture_graph("strip"))
        assert a in family and b in family
        assert a & b and not a <= b and not b <= a

    @settings(max_examples=60, deadline=None)
    @given(gbg_graphs(max_facets=4, max_clique=3, max_n=9))
    def test_minimal_cut_sets_split_the_family(self, g):
        check_family_split(g)

    @pytest.mark.slow
    @settings(max_examples=300, deadline=None)
    @given(gbg_graphs(max_facets=6, max_clique=4, max_n=14))
    def test_minimal_cut_sets_split_the_family_large(self, g):
        check_family_split(g)

    @settings(max_examples=40, deadline=None)
    @given(gbg_graphs(max_facets=4, max_clique=3, max_n=9))
    def test_family_of_merged_graph(self, g):
        check_merged_family(g)

    @pytest.mark.slow
    @settings(max_examples=100, deadline=None)
    @given(gbg_graphs(max_facets=6, max_clique=4, max_n=14))
    def test_family_of_merged_graph_large(self, g):
        check_merged_family(g)


class TestMinimalPrimes:
    def test_strip(self, fixture_graph):
        description = minimal_prime_description(fixture_graph("strip"), {2, 3})
        assert description.variables == ["x_2", "y_2", "x_3", "y_3"]
        assert description.components == [[1], [4, 5]]
        assert description.minors == ["x_4y_5-x_5y_4"]

    def test_sun(self, fixture_graph):
        description = minimal_prime_description(fixture_graph("sun"), {2, 3})
        assert description.components == [[1], [4, 5, 6]]
        assert len(description.minors) == 3

    def test_empty_set(self, fixture_graph):
        description = minimal_prime_description(fixture_graph("strip"), set())
        assert description.variables == []
        assert description.components == [[1, 2, 3, 4, 5]]

    def test_rejects_set_outside_family(self, fixture_graph):
        with pytest.raises(NotInCutPointFamilyError):
            minimal_prime_description(fixture_graph("strip"), {2})

    @settings(max_examples=60, deadline=None)
    @given(gbg_graphs(max_facets=4, max_clique=3, max_n=9))
    def test_components_partition_complement(self, g):
        for t in cut_point_sets(g):
            description = minimal_prime_description(g, t)
            covered = [v for component in description.components for v in component]
            assert sorted(covered) == sorted(set(g.vertices) - t)
