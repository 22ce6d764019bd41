"""
Длиннейший индуцированный путь ℓ(G).
"""
from typing import List

import config
from models.errors import ResourceLimit
from models.graph import Graph, iter_bits


def longest_induced_path(g: Graph, max_n: int = config.INDUCED_PATH_MAX_N,
                         allow_large: bool = False) -> int:
    """Длина (в рёбрах) длиннейшего индуцированного пути; перебор с возвратом."""
    if g.n > max_n and not allow_large:
        raise ResourceLimit(f"поиск ℓ(G) ограничен n ≤ {max_n}", max_n, g.n)
    return len(longest_induced_path_vertices(g)) - 1 if g.n else 0


def longest_induced_path_vertices(g: Graph) -> List[int]:
    """
    Вершины одного из длиннейших индуцированных путей.

    Продолжение пути вершиной w допустимо, если w смежна только с
    последней вершиной пути; blocked - объединение замкнутых окрестностей
    всех вершин пути, кроме последней.
    """
    best: List[int] = [1] if g.n else []

    def extend(path: List[int], blocked: int) -> None:
        nonlocal best
        if len(path) > len(best):
            best = list(path)
        last = path[-1]
        closed_last = g.neighbor_mask(last) | 1 << last
        for w in iter_bits(g.neighbor_mask(last) & ~blocked):
            path.append(w)
            extend(path, blocked | closed_last)
            path.pop()

    for start in g.vertices:
        extend([start], 0)
    return best
