"""
Сокращения обобщённого блочного графа: блочный граф H и последний лист
порядка листьев с его сочленением A.
"""
import logging
from dataclasses import dataclass
from typing import Tuple

from chordal.cliques import leaf_branch_set
from cutsets.separators import minimal_cut_sets_gbg
from gbg.recognition import require_gbg
from graphs.constructions import delete_vertices
from models.errors import GraphStructureError, NotConnectedError
from models.graph import Graph, VertexSet, mask_of, vertices_of

logger = logging.getLogger(__name__)


def block_graph_reduction(g: Graph) -> Graph:
    """
    Из каждого минимального разреза A с |A| ≥ 2 удаляются все вершины,
    кроме наименьшей. Минимальные разрезы GBG попарно не пересекаются,
    поэтому результат не зависит от порядка обработки; каждое сочленение
    превращается в разрезающую вершину, iv(H) = m(G).
    """
    cc = require_gbg(g)
    removed = set()
    for a in minimal_cut_sets_gbg(g, cc):
        if len(a) >= 2:
            removed |= set(sorted(a)[1:])
    logger.debug("сокращение до блочного графа: удалено %d вершин", len(removed))
    return delete_vertices(g, removed)


@dataclass(frozen=True)
class LeafJunction:
    """
    leaf - последняя фасета F_r порядка листьев, branches - все её ветви
    F_{t_1}..F_{t_q}, junction - A = F_r ∩ F_{t_1} ∩ ... ∩ F_{t_q}.
    """
    junction: VertexSet
    leaf: VertexSet
    branches: Tuple[VertexSet, ...]

    @property
    def alpha(self) -> int:
        return len(self.junction)

    @property
    def q(self) -> int:
        return len(self.branches)


def leaf_junction(g: Graph) -> LeafJunction:
    if not g.is_connected():
        raise NotConnectedError("последний лист определён для связных графов")
    cc = require_gbg(g)
    if cc.size < 2:
        raise GraphStructureError("у полного графа нет минимальных разрезов")
    ordered = cc.ordered_facets()
    last = len(ordered) - 1
    positions = leaf_branch_set(ordered, last)
    junction = mask_of(ordered[last])
    for position in positions:
        junction &= mask_of(ordered[position])
    return LeafJunction(
        junction=vertices_of(junction),
        leaf=ordered[last],
        branches=tuple(ordered[p] for p in positions),
    )
