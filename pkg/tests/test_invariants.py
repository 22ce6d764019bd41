"""
Инварианты графа, разложение, цветки и классификатор единственности.
"""
import pytest
from hypothesis import given, settings

from graphs.constructions import disjoint_union
from graphs.families import (
    bowtie_graph,
    caterpillar_graph,
    complete_graph,
    flower_graph,
    path_graph,
    shared_edge_triangles,
    star_graph,
)
from invariants.bounds import classify_unique_extremal, extremal_prediction
from invariants.decomposition import decompose, is_indecomposable
from invariants.flowers import find_flower, is_induced_flower
from invariants.paths import longest_induced_path
from invariants.reductions import block_graph_reduction
from invariants.report import invariant_report
from invariants.shapes import is_caterpillar, is_path, is_star, recognize_flower
from models.errors import NotChordalError, NotConnectedError, NotGeneralizedBlockGraphError, ResourceLimit
from schemas.enumeration import EnumerationConfig

from .strategies import gbg_graphs


class TestInvariantReport:
    def test_tree14(self, fixture_graph):
        report = invariant_report(fixture_graph("tree14"))
        assert (report.cl, report.alpha_type1, report.pv, report.m) == (13, 4, 8, 6)
        assert (report.f, report.iv, report.ell, report.p) == (8, 6, 5, 13)
        assert report.is_gbg and report.is_chordal
        assert report.a == {1: 6}

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_complete_graph(self, n):
        report = invariant_report(complete_graph(n))
        assert (report.m, report.p, report.f, report.cl, report.omega) == (0, n - 1, n, 1, n)
        assert report.minimal_cut_sets == []

    def test_shared_edge(self):
        report = invariant_report(shared_edge_triangles())
        assert report.a == {1: 0, 2: 1}
        assert (report.m, report.p) == (1, 4)
        assert report.minimal_cut_sets == [[2, 3]]

    def test_non_gbg_has_no_p(self, fixture_graph):
        report = invariant_report(fixture_graph("strip"))
        assert not report.is_gbg
        assert report.p is None
        assert report.facets == [[1, 2, 3], [2, 3, 4], [3, 4, 5]]

    def test_labels_in_report(self):
        from graphs.constructions import induced_subgraph
        report = invariant_report(induced_subgraph(path_graph(6), {2, 3, 4}))
        assert sorted(report.deg) == [2, 3, 4]
        assert report.minimal_cut_sets == [[3]]

    def test_star_flag(self):
        assert invariant_report(star_graph(4)).is_star
        assert not invariant_report(path_graph(4)).is_star

    def test_ell_limit_is_reported_as_missing(self):
        report = invariant_report(path_graph(6), EnumerationConfig(induced_path_max_n=5))
        assert report.ell is None


class TestLongestInducedPath:
    @pytest.mark.parametrize("n", [1, 2, 4, 7])
    def test_path(self, n):
        assert longest_induced_path(path_graph(n)) == n - 1

    def test_complete_graph(self):
        assert longest_induced_path(complete_graph(5)) == 1

    def test_strip(self, fixture_graph):
        assert longest_induced_path(fixture_graph("strip")) == 3

    def test_sun(self, fixture_graph):
        assert longest_induced_path(fixture_graph("sun")) == 3

    def test_limit(self):
        with pytest.raises(ResourceLimit):
            longest_induced_path(path_graph(5), max_n=4)
        assert longest_induced_path(path_graph(5), max_n=4, allow_large=True) == 4


class TestDecomposition:
    def test_path(self):
        decomposition = decompose(path_graph(3))
        assert decomposition.size == 2
        assert decomposition.glue_vertices == (2,)

    def test_bowtie(self):
        decomposition = decompose(bowtie_graph())
        assert decomposition.glue_vertices == (3,)
        assert decomposition.vertex_sets == (frozenset({1, 2, 3}), frozenset({3, 4, 5}))
        assert all(part == complete_graph(3) for part in decomposition.components)

    def test_flower_hub_is_not_glue(self):
        assert is_indecomposable(flower_graph(3, 0))

    def test_tree14(self, fixture_graph):
        assert is_indecomposable(fixture_graph("tree14"))

    def test_non_chordal(self, fixture_graph):
        with pytest.raises(NotChordalError):
            decompose(fixture_graph("c4"))

    def test_report_uses_labels(self):
        report = decompose(bowtie_graph()).to_report(bowtie_graph())
        assert report.components == [[1, 2, 3], [3, 4, 5]]
        assert report.glue_vertices == [3]

    @settings(max_examples=100, deadline=None)
    @given(gbg_graphs(max_facets=6, max_clique=4))
    def test_parts_cover_edges(self, g):
        decomposition = decompose(g)
        covered = set()
        for part in decomposition.components:
            covered |= part.labelled_edges()
        assert covered == g.labelled_edges()
        assert decomposition.size == len(decomposition.glue_vertices) + 1


class TestFlowers:
    def test_tree14(self, fixture_graph):
        g = fixture_graph("tree14")
        witness = find_flower(g)
        assert witness.hub == 4
        assert (witness.h, witness.k) == (0, 3)
        assert is_induced_flower(g, witness)

    def test_mixed_flower(self):
        g = flower_graph(1, 2)
        witness = find_flower(g)
        assert (witness.hub, witness.h, witness.k) == (1, 1, 2)
        assert is_induced_flower(g, witness)
        assert witness.to_report(g).petals[0].kind == "triangle"

    def test_caterpillar_has_no_flower(self):
        assert find_flower(caterpillar_graph(3, [2, 1, 2])) is None

    def test_two_triangles_are_not_enough(self):
        assert find_flower(bowtie_graph()) is None

    @pytest.mark.parametrize("h, k", [(3, 0), (0, 3), (2, 1), (4, 1)])
    def test_recognize_flower(self, h, k):
        assert recognize_flower(flower_graph(h, k)) == (1, h, k)

    def test_recognize_flower_rejects_path(self):
        assert recognize_flower(path_graph(5)) is None

    @settings(max_examples=100, deadline=None)
    @given(gbg_graphs(max_facets=7, max_clique=3))
    def test_witness_is_induced(self, g):
        witness = find_flower(g)
        if witness is not None:
            assert is_induced_flower(g, witness)
            assert len(witness.vertices) == 1 + 2 * witness.h + 3 * witness.k


class TestShapes:
    def test_caterpillar(self):
        assert is_caterpillar(caterpillar_graph(3, [2, 1, 2]))
        assert is_caterpillar(path_graph(5))
        assert not is_caterpillar(flower_graph(0, 3))

    def test_star(self):
        assert is_star(path_graph(2))
        assert is_star(star_graph(3))
        assert not is_star(path_graph(4))

    def test_path(self):
        assert is_path(path_graph(1))
        assert not is_path(star_graph(3))


class TestUniqueExtremalClassifier:
    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_complete_graph(self, n):
        result = classify_unique_extremal(complete_graph(n))
        assert (result.unique, result.exact_reg) == (True, 1)

    def test_caterpillar(self):
        result = classify_unique_extremal(caterpillar_graph(3, [2, 1, 2]))
        assert (result.unique, result.exact_reg) == (True, 4)

    def test_flower(self, fixture_graph):
        result = classify_unique_extremal(fixture_graph("f30"))
        assert (result.unique, result.exact_reg) == (False, None)

    @pytest.mark.parametrize("name", ["petal_junction", "petal_junction9"])
    def test_junction_on_petal_edge(self, fixture_graph, name):
        """Цветок G, исчезающий в блочном графе, не мешает единственности."""
        g = fixture_graph(name)
        assert find_flower(g) is not None
        assert find_flower(block_graph_reduction(g)) is None
        result = classify_unique_extremal(g)
        assert (result.unique, result.exact_reg) == (True, 3)

    def test_disconnected(self):
        with pytest.raises(NotConnectedError):
            classify_unique_extremal(disjoint_union([complete_graph(2), complete_graph(2)]))

    def test_not_gbg(self, fixture_graph):
        with pytest.raises(NotGeneralizedBlockGraphError):
            classify_unique_extremal(fixture_graph("strip"))


class TestExtremalPrediction:
    def test_complete_graph(self):
        prediction = extremal_prediction(complete_graph(4))
        assert prediction.position == (3, 4)
        assert prediction.value == 3
        assert prediction.unique

    def test_flower(self, fixture_graph):
        prediction = extremal_prediction(fixture_graph("f30"))
        assert prediction.position == (6, 8)
        assert prediction.value == 5
        assert prediction.value_from_components == 5
        assert prediction.unique is False

    def test_shared_edge(self):
        prediction = extremal_prediction(shared_edge_triangles())
        assert prediction.position == (4, 6)
        assert prediction.value is None
        assert prediction.value_from_components is None

    def test_bowtie_from_components(self):
        prediction = extremal_prediction(bowtie_graph())
        assert prediction.position == (4, 6)
        assert prediction.value_from_components == 4

    def test_disconnected(self):
        prediction = extremal_prediction(disjoint_union([complete_graph(3), path_graph(3)]))
        assert prediction.position == (4, 7)
        assert prediction.value is None
        assert prediction.unique
