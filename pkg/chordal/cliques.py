"""
Максимальные клики, кликовый комплекс Δ(G), порядок листьев квазилеса,
свободные и внутренние вершины.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from models.complex import CliqueComplex, facet_key
from models.graph import Graph, VertexSet, iter_bits, vertices_of

from .recognition import is_chordal

logger = logging.getLogger(__name__)


def _cliques_from_peo(g: Graph, peo: Sequence[int]) -> List[int]:
    """Клики {v} ∪ (поздние соседи v), оставлены максимальные."""
    position = {v: i for i, v in enumerate(peo)}
    candidates = []
    for v in peo:
        later = 0
        for w in iter_bits(g.neighbor_mask(v)):
            if position[w] > position[v]:
                later |= 1 << w
        candidates.append(later | 1 << v)
    candidates.sort(key=lambda m: -m.bit_count())
    maximal: List[int] = []
    for mask in candidates:
        if not any(mask & other == mask for other in maximal):
            maximal.append(mask)
    return maximal


def _cliques_bron_kerbosch(g: Graph) -> List[int]:
    """Бэктрекинг Брона-Кербоша с выбором опорной вершины."""
    result: List[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            result.append(r)
            return
        pivot_pool = p | x
        pivot = max(iter_bits(pivot_pool), key=lambda u: (g.neighbor_mask(u) & p).bit_count())
        for v in iter_bits(p & ~g.neighbor_mask(pivot)):
            neighbors = g.neighbor_mask(v)
            expand(r | 1 << v, p & neighbors, x & neighbors)
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        expand(0, g.all_mask, 0)
    return result


def _sorted_facets(masks: List[int]) -> Tuple[VertexSet, ...]:
    return tuple(sorted((vertices_of(m) for m in masks), key=facet_key))


def maximal_cliques(g: Graph) -> CliqueComplex:
    """
    Кликовый комплекс: фасеты в лексикографическом порядке и, для
    хордальных графов, порядок листьев.
    """
    chordality = is_chordal(g)
    if chordality.is_chordal:
        facets = _sorted_facets(_cliques_from_peo(g, chordality.peo))
        order = leaf_order(facets)
        if order.order is None:
            # Для хордального графа Δ(G) всегда квазилес
            raise AssertionError(f"порядок листьев не найден для хордального графа {g!r}")
        return CliqueComplex(facets, order.order, order.branches)
    return CliqueComplex(_sorted_facets(_cliques_bron_kerbosch(g)))


# ============================================================
# Порядок листьев
# ============================================================
@dataclass(frozen=True)
class LeafOrderResult:
    """
    order - индексы фасет F_1..F_r; branches[i] - ветвь F_i (None для F_1).
    При неудаче order = None, stuck - фасеты, среди которых нет листа.
    """
    order: Optional[Tuple[int, ...]]
    branches: Optional[Tuple[Optional[int], ...]] = None
    stuck: Optional[Tuple[VertexSet, ...]] = None


def _find_branch(facet: int, others: Sequence[int]) -> Optional[int]:
    """
    Ветвь фасеты F среди others: G с H ∩ F ⊆ G ∩ F для всех H.
    Возвращается позиция в others.
    """
    for position, candidate in enumerate(others):
        shared = candidate & facet
        if all(other & facet & ~shared == 0 for other in others):
            return position
    return None


def leaf_order(facets: Sequence[VertexSet]) -> LeafOrderResult:
    """
    Порядок листьев строится с конца: из оставшихся фасет снимается
    лексикографически последний лист.
    """
    masks = [sum(1 << v for v in f) for f in facets]
    remaining = list(range(len(masks)))
    reversed_order = []
    while len(remaining) > 1:
        leaf = None
        for index in sorted(remaining, key=lambda i: facet_key(facets[i]), reverse=True):
            others = [masks[i] for i in remaining if i != index]
            if _find_branch(masks[index], others) is not None:
                leaf = index
                break
        if leaf is None:
            logger.debug("квазилес не найден, остаток %s", [sorted(facets[i]) for i in remaining])
            return LeafOrderResult(None, stuck=tuple(facets[i] for i in remaining))
        reversed_order.append(leaf)
        remaining.remove(leaf)
    reversed_order.extend(remaining)
    order = tuple(reversed(reversed_order))
    branches = leaf_branches([facets[i] for i in order])
    if branches is None:
        raise AssertionError("построенный порядок листьев не прошёл проверку")
    return LeafOrderResult(order, tuple(None if b is None else order[b] for b in branches))


def leaf_branches(ordered: Sequence[VertexSet]) -> Optional[List[Optional[int]]]:
    """
    Проверка порядка листьев: каждая F_i (i > 1) - лист комплекса
    F_1..F_i. Возвращает позиции ветвей в ordered или None.
    """
    masks = [sum(1 << v for v in f) for f in ordered]
    branches: List[Optional[int]] = [None] if masks else []
    for i in range(1, len(masks)):
        position = _find_branch(masks[i], masks[:i])
        if position is None:
            return None
        branches.append(position)
    return branches


def leaf_branch_set(ordered: Sequence[VertexSet], i: int) -> List[int]:
    """Все ветви фасеты ordered[i] среди ordered[:i]."""
    masks = [sum(1 << v for v in f) for f in ordered]
    facet = masks[i]
    previous = masks[:i]
    result = []
    for position, candidate in enumerate(previous):
        shared = candidate & facet
        if shared and all(other & facet & ~shared == 0 for other in previous):
            result.append(position)
    return result


# ============================================================
# Свободные и внутренние вершины
# ============================================================
@dataclass(frozen=True)
class VertexCliqueData:
    free: VertexSet
    internal: VertexSet
    cdeg: Dict[int, int]

    @property
    def f(self) -> int:
        return len(self.free)

    @property
    def iv(self) -> int:
        return len(self.internal)


def free_and_internal_vertices(g: Graph, cc: Optional[CliqueComplex] = None) -> VertexCliqueData:
    """Свободная вершина лежит ровно в одной максимальной клике."""
    if cc is None:
        cc = maximal_cliques(g)
    cdeg = cc.clique_degrees(g.n)
    free = frozenset(v for v, count in cdeg.items() if count == 1)
    internal = frozenset(v for v, count in cdeg.items() if count != 1)
    return VertexCliqueData(free, internal, cdeg)
