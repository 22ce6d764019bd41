"""
Распознавание хордальных графов: поиск максимальной мощности (MCS),
проверка совершенного порядка исключения и свидетель-цикл без хорд.
"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import List, Optional, Tuple

from models.graph import Graph, iter_bits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChordalityResult:
    """
    is_chordal с совершенным порядком исключения (peo) либо
    индуцированным циклом длины ≥ 4 (cycle).
    """
    is_chordal: bool
    peo: Optional[Tuple[int, ...]] = None
    cycle: Optional[Tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.is_chordal


def maximum_cardinality_search(g: Graph) -> List[int]:
    """
    Порядок посещения MCS: на каждом шаге вершина с наибольшим числом
    посещённых соседей, при равенстве - с наименьшим номером.
    """
    weight = [0] * (g.n + 1)
    visited = 0
    order = []
    for _ in range(g.n):
        best, best_weight = 0, -1
        for v in g.vertices:
            if not visited >> v & 1 and weight[v] > best_weight:
                best, best_weight = v, weight[v]
        order.append(best)
        visited |= 1 << best
        for w in iter_bits(g.neighbor_mask(best) & ~visited):
            weight[w] += 1
    return order


def peo_violation(g: Graph, peo: List[int]) -> Optional[Tuple[int, int, int]]:
    """
    Проверка совершенного порядка исключения: поздние соседи каждой
    вершины образуют клику. Нарушение - тройка (v, a, b) с a, b ∈ N(v),
    a ≁ b.
    """
    position = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [w for w in iter_bits(g.neighbor_mask(v)) if position[w] > position[v]]
        if not later:
            continue
        parent = min(later, key=position.__getitem__)
        for w in later:
            if w != parent and not g.neighbor_mask(parent) >> w & 1:
                return v, min(parent, w), max(parent, w)
    return None


def _shortest_path(g: Graph, source: int, target: int, allowed: int) -> Optional[List[int]]:
    parent = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        if v == target:
            path = [v]
            while parent[path[-1]]:
                path.append(parent[path[-1]])
            return path[::-1]
        for w in iter_bits(g.neighbor_mask(v) & allowed):
            if w not in parent:
                parent[w] = v
                queue.append(w)
    return None


def chordless_cycle(g: Graph) -> Optional[Tuple[int, ...]]:
    """
    Индуцированный цикл длины ≥ 4 или None.

    Для вершины v и несмежных соседей a, b кратчайший путь a -> b в
    G - (N[v] \\ {a, b}) вместе с v даёт цикл без хорд.
    """
    for v in g.vertices:
        closed = g.neighbor_mask(v) | 1 << v
        neighbors = list(iter_bits(g.neighbor_mask(v)))
        for i, a in enumerate(neighbors):
            for b in neighbors[i + 1:]:
                if g.neighbor_mask(a) >> b & 1:
                    continue
                allowed = g.all_mask & ~closed | 1 << a | 1 << b
                path = _shortest_path(g, a, b, allowed)
                if path is not None:
                    return (v, *path)
    return None


def is_chordal(g: Graph) -> ChordalityResult:
    order = maximum_cardinality_search(g)
    peo = order[::-1]
    violation = peo_violation(g, peo)
    if violation is None:
        return ChordalityResult(True, peo=tuple(peo))
    cycle = chordless_cycle(g)
    logger.debug("граф не хордален: нарушение PEO %s, цикл %s", violation, cycle)
    return ChordalityResult(False, cycle=cycle)


def is_chordless_cycle(g: Graph, cycle: Tuple[int, ...]) -> bool:
    """Проверка свидетеля: вершины различны, k ≥ 4, рёбра только по циклу."""
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = bool(g.neighbor_mask(cycle[i]) >> cycle[j] & 1)
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if adjacent != consecutive:
                return False
    return True
