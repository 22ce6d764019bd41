"""
Поиск индуцированного цветка F_{h,k}(v) с h + k = 3.

Любой индуцированный F_{h,k}(v) с h + k ≥ 3 содержит индуцированный
цветок ровно с тремя лепестками, поэтому поиск ограничен тройками.
"""
from dataclasses import dataclass
from typing import List, Literal, Optional, Tuple

from models.graph import Graph, iter_bits
from schemas.reports import FlowerReport, PetalReport


@dataclass(frozen=True)
class Petal:
    """
    Лепесток: треугольник {v, a, b} (vertices = (a, b)) или звезда с
    центром c и листьями x, y (vertices = (c, x, y)).
    """
    kind: Literal['triangle', 'star']
    vertices: Tuple[int, ...]

    @property
    def mask(self) -> int:
        return sum(1 << v for v in self.vertices)


@dataclass(frozen=True)
class FlowerWitness:
    hub: int
    petals: Tuple[Petal, Petal, Petal]

    @property
    def h(self) -> int:
        return sum(p.kind == 'triangle' for p in self.petals)

    @property
    def k(self) -> int:
        return sum(p.kind == 'star' for p in self.petals)

    @property
    def vertices(self) -> frozenset:
        return frozenset((self.hub,) + tuple(v for p in self.petals for v in p.vertices))

    def to_report(self, g: Graph) -> FlowerReport:
        return FlowerReport(
            hub=g.label(self.hub),
            h=self.h,
            k=self.k,
            petals=[PetalReport(kind=p.kind, vertices=[g.label(v) for v in p.vertices]) for p in self.petals],
        )


def _petal_candidates(g: Graph, v: int) -> List[Petal]:
    neighborhood = g.neighbor_mask(v)
    closed = neighborhood | 1 << v
    candidates = []
    hub_neighbors = list(iter_bits(neighborhood))
    for i, a in enumerate(hub_neighbors):
        for b in hub_neighbors[i + 1:]:
            if g.neighbor_mask(a) >> b & 1:
                candidates.append(Petal('triangle', (a, b)))
    for c in hub_neighbors:
        outer = list(iter_bits(g.neighbor_mask(c) & ~closed))
        for i, x in enumerate(outer):
            for y in outer[i + 1:]:
                if not g.neighbor_mask(x) >> y & 1:
                    candidates.append(Petal('star', (c, x, y)))
    return candidates


def find_flower(g: Graph) -> Optional[FlowerWitness]:
    """
    Перебор центров по возрастанию и троек лепестков с возвратом.
    Лепестки попарно не пересекаются и не соединены рёбрами.
    """
    for v in g.vertices:
        candidates = _petal_candidates(g, v)
        if len(candidates) < 3:
            continue
        masks = [p.mask for p in candidates]
        reach = []
        for mask in masks:
            closed = mask
            for w in iter_bits(mask):
                closed |= g.neighbor_mask(w)
            reach.append(closed)

        def compatible(i: int, j: int) -> bool:
            return not reach[i] & masks[j]

        for i in range(len(candidates)):
            for j in range(i + 1, len(candidates)):
                if not compatible(i, j):
                    continue
                for k in range(j + 1, len(candidates)):
                    if compatible(i, k) and compatible(j, k):
                        return FlowerWitness(v, (candidates[i], candidates[j], candidates[k]))
    return None


def is_induced_flower(g: Graph, witness: FlowerWitness) -> bool:
    """Перепроверка: вершины свидетеля индуцируют F_{h,k}(hub), h + k = 3."""
    hub = witness.hub
    expected = set()
    for petal in witness.petals:
        if petal.kind == 'triangle':
            a, b = petal.vertices
            expected |= {frozenset((hub, a)), frozenset((hub, b)), frozenset((a, b))}
        else:
            c, x, y = petal.vertices
            expected |= {frozenset((hub, c)), frozenset((c, x)), frozenset((c, y))}
    vertices = sorted(witness.vertices)
    if len(vertices) != 1 + sum(len(p.vertices) for p in witness.petals):
        return False
    actual = {
        frozenset((u, w))
        for i, u in enumerate(vertices) for w in vertices[i + 1:]
        if g.neighbor_mask(u) >> w & 1
    }
    return actual == expected
