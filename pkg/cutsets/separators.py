"""
Минимальные разрезы и семейство C(G) множеств со свойством разрезающей точки.

T - разрез, если c_G(T) > c_G, где c_G(T) - число компонент G[T̄].
Минимальный разрез минимален по включению среди разрезов.
"""
import logging
from itertools import combinations
from typing import Iterable, List, Optional, Sequence

import config
from models.complex import CliqueComplex
from models.errors import NotGeneralizedBlockGraphError, ResourceLimit
from models.graph import Graph, VertexSet, iter_bits, vertices_of

logger = logging.getLogger(__name__)


def sort_vertex_sets(sets: Iterable[VertexSet]) -> List[VertexSet]:
    """Порядок (размер, лексикографический)."""
    return sorted(sets, key=lambda s: (len(s), sorted(s)))


def components_after_removal(g: Graph, t: Iterable[int]) -> int:
    """c_G(T)."""
    return g.count_components(g.all_mask & ~g.check_vertices(t))


def is_cut_set(g: Graph, t: Iterable[int]) -> bool:
    return components_after_removal(g, t) > g.count_components()


# ============================================================
# Минимальные сепараторы (Берри и др.)
# ============================================================
def _minimal_separators(g: Graph, within: int) -> List[int]:
    """
    Все минимальные сепараторы связного подграфа G[within]:
    N(C) для компонент C графа G - N[v], затем замыкание по правилу
    S -> N(C), C - компонента G - (S ∪ N(x)), x ∈ S.
    """
    def neighborhood(component: int) -> int:
        result = 0
        for v in iter_bits(component):
            result |= g.neighbor_mask(v)
        return result & within & ~component

    def close_separators(removed: int) -> List[int]:
        found = []
        for component in g.component_masks(within & ~removed):
            separator = neighborhood(component)
            if separator and within & ~(separator | component):
                found.append(separator)
        return found

    seen = set()
    queue = []
    for v in iter_bits(within):
        for separator in close_separators(g.neighbor_mask(v) & within | 1 << v):
            if separator not in seen:
                seen.add(separator)
                queue.append(separator)
    while queue:
        separator = queue.pop()
        for x in iter_bits(separator):
            for candidate in close_separators(separator | g.neighbor_mask(x) & within):
                if candidate not in seen:
                    seen.add(candidate)
                    queue.append(candidate)
    return list(seen)


def minimal_cut_sets(g: Graph) -> List[VertexSet]:
    """
    Минимальные по включению разрезы. Каждый лежит в одной компоненте
    связности и является минимальным сепаратором этой компоненты, не
    содержащим другого сепаратора.
    """
    result = []
    for component in g.component_masks():
        if component.bit_count() < 3:
            continue
        separators = _minimal_separators(g, component)
        for s in separators:
            if not any(other != s and other & s == other for other in separators):
                result.append(vertices_of(s))
    return sort_vertex_sets(result)


def minimal_cut_sets_exhaustive(g: Graph, max_n: int = config.EXHAUSTIVE_CUT_SET_MAX_N) -> List[VertexSet]:
    """Эталонный перебор всех подмножеств по возрастанию размера."""
    if g.n > max_n:
        raise ResourceLimit(f"полный перебор разрезов ограничен n ≤ {max_n}", max_n, g.n)
    base = g.count_components()
    found: List[int] = []
    for size in range(1, g.n + 1):
        for subset in combinations(g.vertices, size):
            mask = sum(1 << v for v in subset)
            if any(f & mask == f for f in found):
                continue
            if g.count_components(g.all_mask & ~mask) > base:
                found.append(mask)
    return sort_vertex_sets(vertices_of(m) for m in found)


def is_minimal_cut_set(g: Graph, a: Iterable[int]) -> bool:
    a = frozenset(a)
    g.check_vertices(a)
    return a in set(minimal_cut_sets(g))


def minimal_cut_sets_gbg(g: Graph, cc: Optional[CliqueComplex] = None) -> List[VertexSet]:
    """
    Минимальные разрезы обобщённого блочного графа как пересечения фасет:
    A = ∩F_{t_j}, остальные фасеты не пересекают A.
    """
    if cc is None:
        from chordal.cliques import maximal_cliques
        cc = maximal_cliques(g)
    if not cc.is_quasi_forest or cc.gbg_violation() is not None:
        raise NotGeneralizedBlockGraphError("граф не является обобщённым блочным")
    return sort_vertex_sets(cc.junctions())


# ============================================================
# Семейство C(G)
# ============================================================
def _has_cut_point_property(g: Graph, mask: int) -> bool:
    complement = g.all_mask & ~mask
    base = g.count_components(complement)
    for i in iter_bits(mask):
        if not g.count_components(complement | 1 << i) < base:
            return False
    return True


def has_cut_point_property(g: Graph, t: Iterable[int]) -> bool:
    """Каждая i ∈ T - разрезающая вершина G[T̄ ∪ {i}]."""
    return _has_cut_point_property(g, g.check_vertices(t))


def cut_point_sets(g: Graph, max_n: int = config.CUT_POINT_MAX_N,
                   allow_large: bool = False) -> List[VertexSet]:
    """C(G) = {∅} ∪ {T : T обладает свойством разрезающей точки}."""
    if g.n > max_n and not allow_large:
        raise ResourceLimit(f"перечисление C(G) ограничено n ≤ {max_n}", max_n, g.n)
    result: List[VertexSet] = [frozenset()]
    for size in range(1, g.n + 1):
        for subset in combinations(g.vertices, size):
            if _has_cut_point_property(g, sum(1 << v for v in subset)):
                result.append(frozenset(subset))
    logger.debug("|C(G)| = %d для n = %d", len(result), g.n)
    return result


def is_in_cut_point_family(g: Graph, t: Sequence[int]) -> bool:
    return not t or has_cut_point_property(g, t)
