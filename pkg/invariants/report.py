"""
Сводка скалярных инвариантов графа.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional

from chordal.cliques import free_and_internal_vertices
from cutsets.separators import minimal_cut_sets
from gbg.recognition import GbgCertificate, classify_graph
from models.errors import ResourceLimit
from models.graph import Graph, VertexSet
from schemas.enumeration import EnumerationConfig
from schemas.reports import InvariantReport

from .paths import longest_induced_path
from .shapes import is_star

logger = logging.getLogger(__name__)


def pendant_degrees(g: Graph) -> Dict[int, int]:
    """pdeg(v) - число висячих вершин, смежных с v."""
    pendant = sum(1 << v for v in g.vertices if g.neighbor_mask(v).bit_count() == 1)
    return {v: (g.neighbor_mask(v) & pendant).bit_count() for v in g.vertices}


def type1_vertices(cdeg: Dict[int, int], pdeg: Dict[int, int]) -> List[int]:
    """Вершины с pdeg ≥ 1 и cdeg = pdeg + 1."""
    return [v for v in sorted(pdeg) if pdeg[v] >= 1 and cdeg[v] == pdeg[v] + 1]


def projective_dimension_formula(n: int, c_g: int, a: Dict[int, int]) -> int:
    """p(G) = n - c_G + Σ_{i≥2} (i - 1) a_i(G)."""
    return n - c_g + sum((i - 1) * count for i, count in a.items() if i >= 2)


def edged_components(g: Graph) -> int:
    """c′ - число компонент связности, содержащих хотя бы одно ребро."""
    return sum(1 for c in g.component_masks() if c.bit_count() > 1)


@dataclass(frozen=True)
class GraphInvariants:
    """Инварианты вместе с промежуточными структурами для других модулей."""
    report: InvariantReport
    certificate: GbgCertificate
    cut_sets: List[VertexSet]


def compute_invariants(g: Graph, settings: Optional[EnumerationConfig] = None) -> GraphInvariants:
    settings = settings or EnumerationConfig()
    certificate = classify_graph(g)
    cc = certificate.complex
    cliques = free_and_internal_vertices(g, cc)
    cut_sets = minimal_cut_sets(g)
    sizes = Counter(len(a) for a in cut_sets)
    top = max(cc.clique_number - 1, max(sizes, default=0))
    a = {i: sizes.get(i, 0) for i in range(1, top + 1)}
    m = len(cut_sets)
    c_g = g.count_components()
    pdeg = pendant_degrees(g)
    deg = g.degrees()
    try:
        ell = longest_induced_path(g, settings.induced_path_max_n, settings.allow_large)
    except ResourceLimit as e:
        logger.info("ℓ(G) не вычислен: %s", e)
        ell = None
    label = g.label
    report = InvariantReport(
        n=g.n,
        c_g=c_g,
        omega=cc.clique_number,
        cl=cc.size,
        a=a,
        m=m,
        p=projective_dimension_formula(g.n, c_g, a) if certificate.is_gbg else None,
        is_chordal=cc.is_quasi_forest,
        is_gbg=certificate.is_gbg,
        f=cliques.f,
        iv=cliques.iv,
        pv=sum(1 for v in g.vertices if deg[v] == 1),
        alpha_type1=len(type1_vertices(cliques.cdeg, pdeg)),
        k_pdeg=sum(1 for v in g.vertices if pdeg[v] >= 1),
        ell=ell,
        is_star=is_star(g),
        deg={label(v): deg[v] for v in g.vertices},
        cdeg={label(v): cliques.cdeg[v] for v in g.vertices},
        pdeg={label(v): pdeg[v] for v in g.vertices},
        facets=[sorted(label(v) for v in f) for f in cc.facets],
        minimal_cut_sets=[sorted(label(v) for v in s) for s in cut_sets],
    )
    return GraphInvariants(report, certificate, cut_sets)


def invariant_report(g: Graph, settings: Optional[EnumerationConfig] = None) -> InvariantReport:
    return compute_invariants(g, settings).report


def internal_clique_degrees(cdeg: Dict[int, int]) -> List[int]:
    """cdeg внутренних вершин."""
    return [count for count in cdeg.values() if count != 1]
