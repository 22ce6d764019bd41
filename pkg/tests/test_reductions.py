"""
Сокращения GBG: последний лист, G_A, G_A[Ā], G[Ā] и блочный граф H.

Тесты с маркером slow повторяют свойства на 1000 графах с n ≤ 19.
"""
import logging

import pytest
from hypothesis import given, settings

from gbg.recognition import Verdict, classify_graph, is_generalized_block_graph
from graphs.constructions import delete_vertices, disjoint_union, merge_at_cutset
from graphs.families import bowtie_graph, complete_graph, shared_edge_triangles
from invariants.flowers import find_flower
from invariants.reductions import block_graph_reduction, leaf_junction
from invariants.report import invariant_report
from models.errors import GraphStructureError, NotConnectedError

from .strategies import gbg_graphs, large_gbg_graphs

logger = logging.getLogger(__name__)


def has_two_facets(g) -> bool:
    return classify_graph(g).complex.size >= 2


def reduced_graphs(g):
    """(последний лист, G_A, G_A[Ā], G[Ā])."""
    leaf = leaf_junction(g)
    merged = merge_at_cutset(g, leaf.junction)
    return (
        leaf,
        merged,
        delete_vertices(merged, leaf.junction),
        delete_vertices(g, leaf.junction),
    )


def check_reduced_invariants(g) -> None:
    leaf, merged, merged_without, without = reduced_graphs(g)
    original = invariant_report(g)
    m, p = original.m, original.p
    alpha, q = leaf.alpha, leaf.q

    for h in (merged, merged_without, without):
        assert is_generalized_block_graph(h)

    report = invariant_report(merged)
    assert (report.m, report.p) == (m - 1, p - alpha + 1)

    report = invariant_report(merged_without)
    assert (report.m, report.p) == (m - 1, p - 2 * alpha + 1)

    report = invariant_report(without)
    assert report.m <= m - 1
    for size, count in report.a.items():
        assert count <= original.a.get(size, 0) - (size == alpha)
    assert report.p <= p - 2 * alpha - q + 1
    if report.p < p - 2 * alpha - q + 1:
        logger.info("строгое неравенство для p(G[Ā]): %d < %d", report.p, p - 2 * alpha - q + 1)


def check_block_graph_reduction(g) -> None:
    h = block_graph_reduction(g)
    assert classify_graph(h).verdict == Verdict.BLOCK_GRAPH
    assert invariant_report(h).iv == invariant_report(g).m
    if find_flower(h) is not None:
        assert find_flower(g) is not None


class TestLeafJunction:
    def test_shared_edge(self):
        leaf = leaf_junction(shared_edge_triangles())
        assert leaf.junction == frozenset({2, 3})
        assert (leaf.alpha, leaf.q) == (2, 1)

    def test_bowtie(self):
        leaf = leaf_junction(bowtie_graph())
        assert leaf.junction == frozenset({3})
        assert (leaf.alpha, leaf.q) == (1, 1)

    def test_flower_branches(self, fixture_graph):
        leaf = leaf_junction(fixture_graph("f30"))
        assert leaf.junction == frozenset({1})
        assert leaf.q == 2
        assert leaf.leaf not in leaf.branches

    def test_complete_graph(self):
        with pytest.raises(GraphStructureError):
            leaf_junction(complete_graph(3))

    def test_disconnected(self):
        with pytest.raises(NotConnectedError):
            leaf_junction(disjoint_union([bowtie_graph(), complete_graph(2)]))


class TestReducedGraphs:
    def test_shared_edge(self):
        leaf, merged, merged_without, without = reduced_graphs(shared_edge_triangles())
        assert merged == complete_graph(4)
        assert merged_without == complete_graph(2)
        assert without.edge_count == 0
        assert invariant_report(without).p == 0

    def test_bowtie(self):
        leaf, merged, merged_without, without = reduced_graphs(bowtie_graph())
        assert merged == complete_graph(5)
        assert merged_without == complete_graph(4)
        assert [invariant_report(h).m for h in (merged, merged_without, without)] == [0, 0, 0]

    @settings(max_examples=150, deadline=None)
    @given(gbg_graphs(max_facets=6, max_clique=4, max_n=14).filter(has_two_facets))
    def test_invariants_after_reduction(self, g):
        check_reduced_invariants(g)

    @pytest.mark.slow
    @settings(max_examples=1000, deadline=None)
    @given(large_gbg_graphs().filter(has_two_facets))
    def test_invariants_after_reduction_large(self, g):
        check_reduced_invariants(g)


class TestBlockGraphReduction:
    def test_shared_edge(self):
        h = block_graph_reduction(shared_edge_triangles())
        assert h.labels == (1, 2, 4)
        assert h.edges == ((1, 2), (2, 3))

    def test_block_graph_is_fixed(self, fixture_graph):
        g = fixture_graph("f30")
        assert block_graph_reduction(g) == g

    def test_junction_on_petal_edge(self, fixture_graph):
        g = fixture_graph("petal_junction")
        h = block_graph_reduction(g)
        assert h.labels == (1, 2, 4, 5, 6, 7, 8)
        assert find_flower(g) is not None
        assert find_flower(h) is None

    @settings(max_examples=150, deadline=None)
    @given(gbg_graphs(max_facets=6, max_clique=4, max_n=14))
    def test_reduction_properties(self, g):
        check_block_graph_reduction(g)

    @pytest.mark.slow
    @settings(max_examples=1000, deadline=None)
    @given(large_gbg_graphs())
    def test_reduction_properties_large(self, g):
        check_block_graph_reduction(g)
