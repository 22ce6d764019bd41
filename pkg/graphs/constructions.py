"""
Элементарные конструкции над графами: индуцированные подграфы, компоненты
связности, G_v, G_A, G\\e, (G\\e)_e, G_e.
"""
from typing import Iterable, List, Sequence, Tuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components as csgraph_components

from models.errors import EdgeNotFoundError, NotMinimalCutSetError
from models.graph import Graph, VertexSet, iter_bits, vertices_of


def _complete_on(adj: List[int], mask: int) -> None:
    """Достроить клику на маске (на месте)."""
    for v in iter_bits(mask):
        adj[v] |= mask & ~(1 << v)


def induced_subgraph(g: Graph, a: Iterable[int]) -> Graph:
    """
    Индуцированный подграф G[A], перенумерованный в 1..|A| по возрастанию.
    Метки результата - исходные метки g.
    """
    mask = g.check_vertices(a)
    order = list(iter_bits(mask))
    position = {v: i + 1 for i, v in enumerate(order)}
    adj = [0] * (len(order) + 1)
    for v in order:
        for w in iter_bits(g.neighbor_mask(v) & mask):
            adj[position[v]] |= 1 << position[w]
    return Graph._from_masks(len(order), adj, [g.label(v) for v in order])


def delete_vertices(g: Graph, a: Iterable[int]) -> Graph:
    """G[Ā], Ā = [n] \\ A."""
    return induced_subgraph(g, vertices_of(g.all_mask & ~g.check_vertices(a)))


def connected_components(g: Graph) -> List[VertexSet]:
    """Компоненты связности в порядке наименьшей вершины."""
    if g.n == 0:
        return []
    rows = np.array([u - 1 for u, _ in g.edges], dtype=np.int64)
    cols = np.array([v - 1 for _, v in g.edges], dtype=np.int64)
    matrix = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(g.n, g.n))
    count, labels = csgraph_components(matrix, directed=False)
    components: List[set] = [set() for _ in range(count)]
    for index, label in enumerate(labels):
        components[label].add(index + 1)
    return sorted((frozenset(c) for c in components), key=min)


def saturate_vertex(g: Graph, v: int) -> Graph:
    """G_v: окрестность N_G(v) достраивается до клики."""
    g.check_vertex(v)
    adj = list(g.adjacency)
    _complete_on(adj, g.neighbor_mask(v))
    return Graph._from_masks(g.n, adj, g.labels)


def complete_vertex_set(g: Graph, a: Iterable[int]) -> Graph:
    """Граф G с кликой, достроенной на множестве A."""
    mask = g.check_vertices(a)
    adj = list(g.adjacency)
    _complete_on(adj, mask)
    return Graph._from_masks(g.n, adj, g.labels)


def merge_at_cutset(g: Graph, a: Iterable[int]) -> Graph:
    """
    G_A: фасеты F_{t_1}..F_{t_q}, содержащие минимальный разрез A,
    заменяются кликой на их объединении.
    """
    from chordal.cliques import maximal_cliques
    from cutsets.separators import is_minimal_cut_set

    a = frozenset(a)
    mask = g.check_vertices(a)
    if not a or not is_minimal_cut_set(g, a):
        raise NotMinimalCutSetError(f"{sorted(a)} не является минимальным разрезом")
    union = 0
    for facet in maximal_cliques(g).facet_masks:
        if facet & mask == mask:
            union |= facet
    return complete_vertex_set(g, vertices_of(union))


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    """G \\ e на том же множестве вершин."""
    u, v = e
    if not g.has_edge(u, v):
        raise EdgeNotFoundError(f"ребра {{{u}, {v}}} нет в графе")
    adj = list(g.adjacency)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph._from_masks(g.n, adj, g.labels)


def isolate_vertex(g: Graph, u: int) -> Graph:
    """(G \\ u) ⊔ {u}: все рёбра при u удаляются, вершина остаётся."""
    g.check_vertex(u)
    adj = list(g.adjacency)
    for w in iter_bits(adj[u]):
        adj[w] &= ~(1 << u)
    adj[u] = 0
    return Graph._from_masks(g.n, adj, g.labels)


def complete_edge_neighborhoods(g: Graph, e: Sequence[int]) -> Graph:
    """G_e: достраиваются до клик N_G(u) и N_G(v)."""
    u, v = e
    g.check_vertex(u)
    g.check_vertex(v)
    adj = list(g.adjacency)
    _complete_on(adj, g.neighbor_mask(u))
    _complete_on(adj, g.neighbor_mask(v))
    return Graph._from_masks(g.n, adj, g.labels)


def cut_edge_constructions(g: Graph, e: Sequence[int]) -> Tuple[Graph, Graph]:
    """Пара (G \\ e, (G \\ e)_e)."""
    without = delete_edge(g, e)
    return without, complete_edge_neighborhoods(without, e)


def relabel(g: Graph, permutation: Sequence[int]) -> Graph:
    """Граф с вершиной v, переименованной в permutation[v - 1]."""
    if sorted(permutation) != list(g.vertices):
        raise ValueError("permutation должна быть перестановкой 1..n")
    edges = [(permutation[u - 1], permutation[v - 1]) for u, v in g.edges]
    labels = [0] * g.n
    for v in g.vertices:
        labels[permutation[v - 1] - 1] = g.label(v)
    return Graph(g.n, edges, labels)


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Дизъюнктное объединение с последовательной нумерацией вершин."""
    edges = []
    offset = 0
    for graph in graphs:
        edges.extend((u + offset, v + offset) for u, v in graph.edges)
        offset += graph.n
    return Graph(offset, edges)


def glue_at_vertex(first: Graph, u: int, second: Graph, v: int) -> Graph:
    """Склейка двух графов по вершинам u ∈ first и v ∈ second."""
    first.check_vertex(u)
    second.check_vertex(v)
    mapping = {}
    next_vertex = first.n + 1
    for w in second.vertices:
        if w == v:
            mapping[w] = u
        else:
            mapping[w] = next_vertex
            next_vertex += 1
    edges = list(first.edges) + [(mapping[a], mapping[b]) for a, b in second.edges]
    return Graph(next_vertex - 1, edges)
