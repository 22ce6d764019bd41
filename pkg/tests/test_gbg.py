"""
Распознавание и генерация обобщённых блочных графов.
"""
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordal.cliques import maximal_cliques
from cutsets.separators import minimal_cut_sets
from gbg.generator import generate_corpus, random_gbg
from gbg.recognition import Verdict, classify_graph, is_generalized_block_graph, require_gbg, violates_triple_condition
from graphs.families import complete_graph, shared_edge_triangles, star_graph
from invariants.shapes import is_complete
from models.errors import InfeasibleParametersError, NotGeneralizedBlockGraphError
from schemas.enumeration import GeneratorConfig

from .strategies import SEEDS, gbg_graphs, simple_graphs, to_networkx


def satisfies_triple_condition(facets) -> bool:
    """Прямая проверка определения по всем тройкам фасет."""
    for a, b, c in combinations(facets, 3):
        if a & b & c and not (a & b == a & c == b & c):
            return False
    return True


def check_against_brute_force(g) -> None:
    certificate = classify_graph(g)
    if not nx.is_chordal(to_networkx(g)):
        assert certificate.verdict == Verdict.NOT_CHORDAL
        return
    facets = maximal_cliques(g).facets
    assert certificate.is_gbg == satisfies_triple_condition(facets)
    if certificate.is_gbg:
        block = all(len(a) == 1 for a in minimal_cut_sets(g))
        assert (certificate.verdict == Verdict.BLOCK_GRAPH) == block
    else:
        assert violates_triple_condition(certificate.triple)


class TestClassification:
    def test_strip(self, fixture_graph):
        certificate = classify_graph(fixture_graph("strip"))
        assert certificate.verdict == Verdict.CHORDAL_NOT_GBG
        assert certificate.triple == (frozenset({1, 2, 3}), frozenset({2, 3, 4}), frozenset({3, 4, 5}))
        assert violates_triple_condition(certificate.triple)

    def test_sun(self, fixture_graph):
        certificate = classify_graph(fixture_graph("sun"))
        assert certificate.verdict == Verdict.CHORDAL_NOT_GBG
        assert violates_triple_condition(certificate.triple)

    def test_complete_graph(self):
        assert classify_graph(complete_graph(4)).verdict == Verdict.BLOCK_GRAPH

    def test_shared_edge(self):
        certificate = classify_graph(shared_edge_triangles())
        assert certificate.verdict == Verdict.GBG
        assert certificate.is_gbg

    def test_tree14_tree(self, fixture_graph):
        assert classify_graph(fixture_graph("tree14")).verdict == Verdict.BLOCK_GRAPH

    def test_non_chordal(self, fixture_graph):
        certificate = classify_graph(fixture_graph("c4"))
        assert certificate.verdict == Verdict.NOT_CHORDAL
        assert len(certificate.cycle) == 4
        assert not is_generalized_block_graph(fixture_graph("c4"))

    def test_report(self, fixture_graph):
        report = classify_graph(fixture_graph("strip")).to_report(fixture_graph("strip"))
        assert report.verdict == "ChordalNotGBG"
        assert report.triple == [[1, 2, 3], [2, 3, 4], [3, 4, 5]]
        assert report.cycle is None

    def test_require_gbg(self, fixture_graph):
        with pytest.raises(NotGeneralizedBlockGraphError):
            require_gbg(fixture_graph("strip"))
        assert require_gbg(star_graph(3)).size == 3

    @settings(max_examples=200, deadline=None)
    @given(simple_graphs(max_n=9))
    def test_agrees_with_brute_force(self, g):
        check_against_brute_force(g)

    @pytest.mark.slow
    @settings(max_examples=300, deadline=None)
    @given(simple_graphs(max_n=14) | gbg_graphs(max_facets=6, max_clique=4, max_n=14))
    def test_agrees_with_brute_force_large(self, g):
        check_against_brute_force(g)


class TestGenerator:
    def test_single_facet_is_complete(self):
        for seed in range(10):
            g = random_gbg(seed, 1, 4)
            assert is_complete(g)
            assert 2 <= g.n <= 4

    def test_two_facets_share_one_junction(self):
        for seed in range(10):
            cc = maximal_cliques(random_gbg(seed, 2, 4))
            assert cc.size == 2
            assert len(cc.junctions()) == 1

    def test_deterministic(self):
        assert random_gbg(7, 6, 4) == random_gbg(7, 6, 4)
        assert random_gbg(7, 6, 4, shuffle_labels=True) == random_gbg(7, 6, 4, shuffle_labels=True)

    @pytest.mark.parametrize("facets, max_clique, probability", [(0, 3, 0.5), (3, 1, 0.5), (3, 3, 1.5)])
    def test_infeasible_parameters(self, facets, max_clique, probability):
        with pytest.raises(InfeasibleParametersError):
            random_gbg(0, facets, max_clique, probability)

    @settings(max_examples=300, deadline=None)
    @given(SEEDS, st.integers(min_value=1, max_value=8), st.integers(min_value=2, max_value=5),
           st.floats(min_value=0.0, max_value=1.0), st.booleans())
    def test_output_is_connected_gbg(self, seed, facets, max_clique, probability, shuffle):
        g = random_gbg(seed, facets, max_clique, probability, shuffle_labels=shuffle)
        certificate = classify_graph(g)
        assert certificate.is_gbg
        assert certificate.complex.size == facets
        assert certificate.complex.clique_number <= max_clique
        assert g.is_connected()

    @pytest.mark.slow
    def test_thousand_seeds(self):
        for seed in range(1000):
            g = random_gbg(seed, 1 + seed % 8, 2 + seed % 4, shuffle_labels=seed % 2 == 1)
            assert classify_graph(g).verdict in (Verdict.GBG, Verdict.BLOCK_GRAPH)
            assert g.is_connected()

    @settings(max_examples=100, deadline=None)
    @given(gbg_graphs(max_facets=8, max_clique=5))
    def test_junctions_are_disjoint(self, g):
        junctions = maximal_cliques(g).junctions()
        for a, b in combinations(junctions, 2):
            assert not a & b

    def test_corpus(self):
        settings_ = GeneratorConfig(seed=3, facets=3, max_clique=2, count=5)
        first = generate_corpus(settings_)
        second = generate_corpus(settings_)
        assert [item.graph for item in first] == [item.graph for item in second]
        assert [item.index for item in first] == list(range(5))
        for item in first:
            assert item.is_star == (max(item.graph.degrees().values()) == item.graph.n - 1)
            assert item.to_report().edges == [list(e) for e in item.graph.edges]
