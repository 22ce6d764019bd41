"""
Разложение хордального графа на неразложимые части.

G разложим, если G = G_1 ∪ G_2, V(G_1) ∩ V(G_2) = {v} и v свободна в обеих
частях. Для хордальных графов точки склейки - разрезающие вершины,
лежащие ровно в двух максимальных кликах.
"""
from dataclasses import dataclass
from typing import List, Optional, Tuple

from chordal.cliques import maximal_cliques
from graphs.constructions import induced_subgraph
from models.complex import CliqueComplex
from models.errors import NotChordalError
from models.graph import Graph, VertexSet, iter_bits, vertices_of
from schemas.reports import DecompositionReport


@dataclass(frozen=True)
class Decomposition:
    """
    components - индуцированные подграфы G_1..G_r (вершины перенумерованы,
    метки - вершины G), vertex_sets - их множества вершин в G.
    """
    components: Tuple[Graph, ...]
    vertex_sets: Tuple[VertexSet, ...]
    glue_vertices: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.components)

    def to_report(self, g: Graph) -> DecompositionReport:
        return DecompositionReport(
            components=[sorted(g.label(v) for v in s) for s in self.vertex_sets],
            glue_vertices=[g.label(v) for v in self.glue_vertices],
        )


def split_vertices(g: Graph, cc: CliqueComplex) -> List[int]:
    """Вершины с cdeg = 2, удаление которых увеличивает число компонент."""
    cdeg = cc.clique_degrees(g.n)
    base = g.count_components()
    return [
        v for v in g.vertices
        if cdeg[v] == 2 and g.count_components(g.all_mask & ~(1 << v)) > base
    ]


def decompose(g: Graph, cc: Optional[CliqueComplex] = None) -> Decomposition:
    """
    Фасеты объединяются в части, если делят вершину вне точек склейки;
    часть - подграф, индуцированный объединением её фасет.
    """
    if cc is None:
        cc = maximal_cliques(g)
    if not cc.is_quasi_forest:
        raise NotChordalError("разложение определено для хордальных графов")
    glue = split_vertices(g, cc)
    glue_mask = sum(1 << v for v in glue)

    masks = cc.facet_masks
    parent = list(range(len(masks)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for v in g.vertices:
        if glue_mask >> v & 1:
            continue
        holders = [i for i, m in enumerate(masks) if m >> v & 1]
        for i in holders[1:]:
            parent[find(i)] = find(holders[0])

    groups: dict = {}
    for i, mask in enumerate(masks):
        root = find(i)
        groups[root] = groups.get(root, 0) | mask
    parts = sorted(groups.values(), key=lambda m: (m & -m, m))

    return Decomposition(
        components=tuple(induced_subgraph(g, iter_bits(part)) for part in parts),
        vertex_sets=tuple(vertices_of(part) for part in parts),
        glue_vertices=tuple(glue),
    )


def is_indecomposable(g: Graph, cc: Optional[CliqueComplex] = None) -> bool:
    """Связный граф с единственной частью разложения."""
    return g.is_connected() and decompose(g, cc).size == 1
