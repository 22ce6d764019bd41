"""
Именованные семейства графов.
"""
from itertools import combinations

from models.graph import Graph


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(1, n + 1), 2))


def path_graph(n: int) -> Graph:
    """P_n: путь 1 - 2 - ... - n."""
    return Graph(n, ((v, v + 1) for v in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("цикл определён для n ≥ 3")
    return Graph(n, [(v, v + 1) for v in range(1, n)] + [(1, n)])


def star_graph(m: int) -> Graph:
    """K_{1,m} с центром 1."""
    return Graph(m + 1, ((1, v) for v in range(2, m + 2)))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def flower_graph(h: int, k: int) -> Graph:
    """
    F_{h,k}(1): h треугольников и k звёзд K_{1,3}, склеенных по вершине 1.

    Треугольник i занимает вершины (2i, 2i+1); звезда - центр c и листья
    c+1, c+2 сразу после треугольников.
    """
    edges = []
    next_vertex = 2
    for _ in range(h):
        a, b = next_vertex, next_vertex + 1
        edges += [(1, a), (1, b), (a, b)]
        next_vertex += 2
    for _ in range(k):
        c, x, y = next_vertex, next_vertex + 1, next_vertex + 2
        edges += [(1, c), (c, x), (c, y)]
        next_vertex += 3
    return Graph(next_vertex - 1, edges)


def bowtie_graph() -> Graph:
    """Два треугольника {1,2,3} и {3,4,5}."""
    return Graph(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])


def shared_edge_triangles() -> Graph:
    """Треугольники {1,2,3} и {2,3,4} с общим ребром {2,3}."""
    return Graph(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])


def caterpillar_graph(spine: int, legs: list) -> Graph:
    """
    Гусеница: путь из spine вершин, к i-й вершине пути подвешено legs[i] листьев.
    """
    if len(legs) != spine:
        raise ValueError("длина legs должна совпадать с длиной хребта")
    edges = [(v, v + 1) for v in range(1, spine)]
    next_vertex = spine + 1
    for v, count in enumerate(legs, start=1):
        for _ in range(count):
            edges.append((v, next_vertex))
            next_vertex += 1
    return Graph(next_vertex - 1, edges)
