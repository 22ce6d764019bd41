"""
Кликовый комплекс Δ(G): список фасет (максимальных клик) и порядок листьев.
"""
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Optional, Tuple

from .graph import VertexSet, iter_bits, mask_of, vertices_of


def facet_key(facet: VertexSet) -> Tuple[int, ...]:
    """Ключ лексикографической сортировки фасет."""
    return tuple(sorted(facet))


@dataclass(frozen=True)
class CliqueComplex:
    """
    Фасеты Δ(G) в лексикографическом порядке.

    leaf_order - индексы фасет в порядке листьев (F_1, ..., F_r), branches[i] -
    индекс ветви для i-й позиции порядка (None для первой фасеты).
    Оба поля отсутствуют, если комплекс не квазилес.
    """
    facets: Tuple[VertexSet, ...]
    leaf_order: Optional[Tuple[int, ...]] = None
    branches: Optional[Tuple[Optional[int], ...]] = None
    _masks: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, '_masks', tuple(mask_of(f) for f in self.facets))

    @property
    def facet_masks(self) -> Tuple[int, ...]:
        return self._masks

    @property
    def size(self) -> int:
        """cl(G) - число максимальных клик."""
        return len(self.facets)

    @property
    def clique_number(self) -> int:
        """ω(G)."""
        return max((len(f) for f in self.facets), default=0)

    @property
    def is_quasi_forest(self) -> bool:
        return self.leaf_order is not None

    def ordered_facets(self) -> Tuple[VertexSet, ...]:
        if self.leaf_order is None:
            return ()
        return tuple(self.facets[i] for i in self.leaf_order)

    def clique_degrees(self, n: int) -> Dict[int, int]:
        """cdeg(v) для всех вершин 1..n."""
        cdeg = {v: 0 for v in range(1, n + 1)}
        for facet in self.facets:
            for v in facet:
                cdeg[v] += 1
        return cdeg

    def gbg_violation(self) -> Optional[Tuple[VertexSet, VertexSet, VertexSet]]:
        """
        Тройка фасет с общей вершиной и различными попарными пересечениями.

        Перебор по вершинам в порядке возрастания и по тройкам фасет,
        содержащих вершину, в лексикографическом порядке. None - условие
        обобщённого блочного графа выполнено.
        """
        incidence: Dict[int, list] = {}
        for index, mask in enumerate(self._masks):
            for v in iter_bits(mask):
                incidence.setdefault(v, []).append(index)
        for v in sorted(incidence):
            indices = incidence[v]
            if len(indices) < 3:
                continue
            for i, j, k in combinations(indices, 3):
                a, b, c = self._masks[i], self._masks[j], self._masks[k]
                if not (a & b == a & c == b & c):
                    return self.facets[i], self.facets[j], self.facets[k]
        return None

    def junctions(self) -> Tuple[VertexSet, ...]:
        """
        Множества A = ∩F_t, где все фасеты, задевающие A, содержат A
        и таких фасет не меньше двух. Для обобщённых блочных графов это
        ровно минимальные разрезы.
        """
        found = set()
        for i, j in combinations(range(len(self._masks)), 2):
            candidate = self._masks[i] & self._masks[j]
            if not candidate or candidate in found:
                continue
            meeting = [m for m in self._masks if m & candidate]
            if all(m & candidate == candidate for m in meeting):
                common = meeting[0]
                for m in meeting[1:]:
                    common &= m
                if common == candidate:
                    found.add(candidate)
        return tuple(sorted((vertices_of(m) for m in found), key=lambda s: (len(s), facet_key(s))))
