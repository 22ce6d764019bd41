"""
Стратегии hypothesis для случайных графов.
"""
import networkx as nx
from hypothesis import strategies as st

from gbg.generator import random_gbg
from models.graph import Graph

SEEDS = st.integers(min_value=0, max_value=2 ** 63 - 1)


def gbg_graphs(max_facets: int = 5, max_clique: int = 3, max_n: int = None):
    """Связные GBG из генератора; max_n отбрасывает слишком большие графы."""
    strategy = st.builds(
        random_gbg,
        SEEDS,
        st.integers(min_value=1, max_value=max_facets),
        st.integers(min_value=2, max_value=max_clique),
    )
    if max_n is not None:
        strategy = strategy.filter(lambda g: g.n <= max_n)
    return strategy


def large_gbg_graphs():
    """Связные GBG с n ≤ 19 без отбраковки: 9 фасет до K_3 или 6 фасет до K_4."""
    return gbg_graphs(max_facets=9, max_clique=3) | gbg_graphs(max_facets=6, max_clique=4)


def trees(max_edges: int = 8):
    return gbg_graphs(max_facets=max_edges, max_clique=2)


@st.composite
def simple_graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    if not pairs:
        return Graph(n)
    return Graph(n, draw(st.lists(st.sampled_from(pairs), unique=True)))


@st.composite
def permutations_of(draw, n: int):
    return draw(st.permutations(list(range(1, n + 1))))


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h
