"""
Распознавание обобщённых блочных графов (GBG) и блочных графов.

Хордальный граф - GBG, если для любых трёх максимальных клик с общей
вершиной все попарные пересечения совпадают. GBG - блочный граф, если
все его минимальные разрезы одноэлементны.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from chordal.cliques import maximal_cliques
from chordal.recognition import is_chordal
from models.complex import CliqueComplex
from models.errors import NotGeneralizedBlockGraphError
from models.graph import Graph, VertexSet
from schemas.reports import CertificateReport

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    GBG = "GBG"
    BLOCK_GRAPH = "BlockGraph"
    CHORDAL_NOT_GBG = "ChordalNotGBG"
    NOT_CHORDAL = "NotChordal"


@dataclass(frozen=True)
class GbgCertificate:
    """Вердикт со свидетелем: тройка фасет или цикл без хорд."""
    verdict: Verdict
    complex: CliqueComplex
    triple: Optional[Tuple[VertexSet, VertexSet, VertexSet]] = None
    cycle: Optional[Tuple[int, ...]] = None

    @property
    def is_gbg(self) -> bool:
        return self.verdict in (Verdict.GBG, Verdict.BLOCK_GRAPH)

    def to_report(self, g: Graph) -> CertificateReport:
        label = g.label
        triple = None
        if self.triple is not None:
            triple = [sorted(label(v) for v in facet) for facet in self.triple]
        cycle = None if self.cycle is None else [label(v) for v in self.cycle]
        return CertificateReport(verdict=self.verdict.value, triple=triple, cycle=cycle)


def classify_graph(g: Graph) -> GbgCertificate:
    chordality = is_chordal(g)
    cc = maximal_cliques(g)
    if not chordality.is_chordal:
        return GbgCertificate(Verdict.NOT_CHORDAL, cc, cycle=chordality.cycle)
    triple = cc.gbg_violation()
    if triple is not None:
        logger.debug("нарушение условия GBG: %s", [sorted(f) for f in triple])
        return GbgCertificate(Verdict.CHORDAL_NOT_GBG, cc, triple=triple)
    if all(len(a) == 1 for a in cc.junctions()):
        return GbgCertificate(Verdict.BLOCK_GRAPH, cc)
    return GbgCertificate(Verdict.GBG, cc)


def is_generalized_block_graph(g: Graph) -> bool:
    return classify_graph(g).is_gbg


def require_gbg(g: Graph) -> CliqueComplex:
    """Кликовый комплекс GBG или NotGeneralizedBlockGraphError."""
    certificate = classify_graph(g)
    if not certificate.is_gbg:
        raise NotGeneralizedBlockGraphError(
            f"граф не является обобщённым блочным (вердикт {certificate.verdict.value})"
        )
    return certificate.complex


def violates_triple_condition(triple: Tuple[VertexSet, VertexSet, VertexSet]) -> bool:
    """Проверка свидетеля: общая вершина есть, попарные пересечения различны."""
    a, b, c = triple
    return bool(a & b & c) and not (a & b == a & c == b & c)
