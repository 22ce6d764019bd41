"""
Классификатор единственности экстремального числа Бетти, предсказание
экстремальной позиции β_{p, p+m+1} и оценки регулярности S/J_G.

Многочлен Бетти несвязного графа и разложимого графа - произведение
многочленов частей, поэтому регулярность и проективная размерность
складываются по частям.
"""
import logging
from dataclasses import dataclass
from math import prod
from typing import List, Optional, Tuple

from chordal.cliques import free_and_internal_vertices, maximal_cliques
from cutsets.separators import minimal_cut_sets
from gbg.recognition import require_gbg
from graphs.constructions import induced_subgraph
from models.errors import NotConnectedError
from models.graph import Graph, iter_bits
from schemas.enumeration import EnumerationConfig
from schemas.reports import Bound, BoundsReport, ExtremalPredictionReport

from .decomposition import decompose
from .flowers import find_flower
from .reductions import block_graph_reduction
from .report import (
    compute_invariants,
    edged_components,
    internal_clique_degrees,
    pendant_degrees,
    projective_dimension_formula,
    type1_vertices,
)
from .shapes import is_caterpillar, is_complete, is_path, is_star, recognize_flower

logger = logging.getLogger(__name__)


# ============================================================
# Классификатор
# ============================================================
@dataclass(frozen=True)
class UniqueExtremalResult:
    unique: bool
    exact_reg: Optional[int] = None


def classify_unique_extremal(g: Graph) -> UniqueExtremalResult:
    """
    Единственность экстремального числа Бетти связного GBG: ни для одной
    неразложимой части G_i блочный граф H_i (сокращение G_i) не содержит
    индуцированного цветка с h + k ≥ 3. В этом случае reg(S/J_G) = m(G) + 1.

    Цветок в G_i, у которого ребро треугольного лепестка напротив центра -
    сочленение, в H_i вырождается и единственности не нарушает.
    """
    if not g.is_connected():
        raise NotConnectedError("классификатор определён для связных графов")
    cc = require_gbg(g)
    if g.n == 1:
        return UniqueExtremalResult(True, 0)
    for piece in decompose(g, cc).components:
        if find_flower(block_graph_reduction(piece)) is not None:
            return UniqueExtremalResult(False)
    return UniqueExtremalResult(True, len(minimal_cut_sets(g)) + 1)


def _connected_components(g: Graph) -> List[Graph]:
    return [induced_subgraph(g, iter_bits(c)) for c in g.component_masks()]


# ============================================================
# Экстремальная позиция
# ============================================================
@dataclass(frozen=True)
class ExtremalPrediction:
    """
    position - (p, p + m + c′); value - f(G) - 1 для связного полного графа
    или графа, все внутренние вершины которого имеют cdeg > 2;
    value_from_components - произведение таких значений по частям разложения.
    """
    position: Tuple[int, int]
    value: Optional[int]
    value_from_components: Optional[int]
    unique: Optional[bool]

    def to_report(self) -> ExtremalPredictionReport:
        return ExtremalPredictionReport(position=self.position, value=self.value, unique=self.unique)


def _piece_extremal_value(piece: Graph) -> Optional[int]:
    """f - 1 для части, удовлетворяющей условию значения, иначе None."""
    if piece.n < 2:
        return None
    data = free_and_internal_vertices(piece)
    if is_complete(piece) or all(c > 2 for c in internal_clique_degrees(data.cdeg)):
        return data.f - 1
    return None


def extremal_value_from_decomposition(g: Graph) -> Optional[int]:
    """Π (f(G_i) - 1) по неразложимым частям связного GBG."""
    if not g.is_connected() or g.n < 2:
        return None
    values = [_piece_extremal_value(piece) for piece in decompose(g).components]
    if any(v is None for v in values):
        return None
    return prod(values)


def extremal_prediction(g: Graph) -> ExtremalPrediction:
    cc = require_gbg(g)
    cut_sets = minimal_cut_sets(g)
    m = len(cut_sets)
    a: dict = {}
    for s in cut_sets:
        a[len(s)] = a.get(len(s), 0) + 1
    p = projective_dimension_formula(g.n, g.count_components(), a)
    position = (p, p + m + edged_components(g))

    value = None
    if g.is_connected() and g.n >= 2:
        data = free_and_internal_vertices(g, cc)
        if is_complete(g) or all(c > 2 for c in internal_clique_degrees(data.cdeg)):
            value = data.f - 1

    if g.is_connected():
        unique = classify_unique_extremal(g).unique
    else:
        unique = all(
            classify_unique_extremal(component).unique
            for component in _connected_components(g)
        )
    return ExtremalPrediction(position, value, extremal_value_from_decomposition(g), unique)


# ============================================================
# Оценки регулярности
# ============================================================
def improved_contribution(piece: Graph) -> int:
    """
    Вклад неразложимой связной части в покомпонентную оценку:
    K_1 - 0, полный граф - 1, звезда - 2, иначе cl + α - pv.
    """
    if piece.n == 1:
        return 0
    if is_complete(piece):
        return 1
    if is_star(piece):
        return 2
    return direct_improved_value(piece)


def direct_improved_value(g: Graph) -> int:
    """cl(G) + α(G) - pv(G)."""
    cc = maximal_cliques(g)
    cdeg = cc.clique_degrees(g.n)
    pdeg = pendant_degrees(g)
    pv = sum(1 for v in g.vertices if g.neighbor_mask(v).bit_count() == 1)
    return cc.size + len(type1_vertices(cdeg, pdeg)) - pv


def _piece_exact(piece: Graph) -> Optional[Tuple[int, str]]:
    """Точная регулярность неразложимой связной части по её форме."""
    if piece.n == 1:
        return 0, "complete"
    if is_complete(piece):
        return 1, "complete"
    if is_path(piece):
        return piece.n - 1, "path"
    if is_star(piece):
        return 2, "star"
    flower = recognize_flower(piece)
    if flower is not None:
        _, h, k = flower
        return len(minimal_cut_sets(piece)) + h + k - 1, "flower"
    return None


def _component_exact(component: Graph) -> Optional[Tuple[int, List[str]]]:
    result = classify_unique_extremal(component)
    if result.unique:
        return result.exact_reg, ["classifier"]
    total, sources = 0, []
    for piece in decompose(component).components:
        exact = _piece_exact(piece)
        if exact is None:
            return None
        total += exact[0]
        sources.append(exact[1])
    return total, sources


def bounds_report(g: Graph, settings: Optional[EnumerationConfig] = None) -> BoundsReport:
    invariants = compute_invariants(g, settings)
    report = invariants.report
    is_gbg = report.is_gbg

    lower_mm = Bound(value=report.ell, applicable=report.ell is not None)
    upper_general = Bound(value=max(g.n - 1, 0), applicable=True)
    upper_cl = Bound(value=report.cl, applicable=True) if report.is_chordal else Bound()
    if not is_gbg:
        return BoundsReport(
            lower_mm=lower_mm,
            lower_gbg=Bound(),
            upper_general=upper_general,
            upper_cl=upper_cl,
            upper_improved=Bound(),
            upper_improved_direct=Bound(),
            exact_reg=Bound(),
        )

    components = _connected_components(g)
    lower_gbg = Bound(value=report.m + edged_components(g), applicable=True)

    improved = 0
    for component in components:
        for piece in decompose(component).components:
            improved += improved_contribution(piece)
    upper_improved = Bound(value=improved, applicable=True)

    indecomposable = g.is_connected() and decompose(g, invariants.certificate.complex).size == 1
    direct = Bound()
    if indecomposable and not report.is_star:
        direct = Bound(value=direct_improved_value(g), applicable=True)

    exact_total, sources = 0, []
    for component in components:
        exact = _component_exact(component)
        if exact is None:
            exact_total = None
            break
        exact_total += exact[0]
        sources += exact[1]
    if exact_total is None:
        exact_reg, source = Bound(), None
    else:
        exact_reg = Bound(value=exact_total, applicable=True)
        distinct = sorted(set(sources))
        source = distinct[0] if len(distinct) == 1 else "components"

    attained_caterpillar = (
        direct.applicable and is_caterpillar(g) and direct.value == report.m + 1
    )
    attained_flower = (
        direct.applicable and recognize_flower(g) is not None and direct.value == exact_reg.value
    )
    logger.debug("оценки: [%s, %s], точное %s (%s)", lower_gbg.value, upper_improved.value,
                 exact_reg.value, source)
    return BoundsReport(
        lower_mm=lower_mm,
        lower_gbg=lower_gbg,
        upper_general=upper_general,
        upper_cl=upper_cl,
        upper_improved=upper_improved,
        upper_improved_direct=direct,
        exact_reg=exact_reg,
        exact_reg_source=source,
        upper_attained_caterpillar=attained_caterpillar,
        upper_attained_flower=attained_flower,
    )
