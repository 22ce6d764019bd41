"""
Генератор связных обобщённых блочных графов для свойств-тестов.

Алгоритм: начальная клика; далее каждая новая клика либо приклеивается
к существующему сочленению (a), либо создаётся новое сочленение A внутри
существующей фасеты из вершин, не входящих ни в одно сочленение (b), и к
нему приклеивается клика из новых вершин. Сочленения попарно не
пересекаются, поэтому условие GBG выполнено по построению; результат
всё равно перепроверяется распознавателем.

Источник случайности - numpy.random.Generator(PCG64), для корпусов -
SeedSequence(seed).spawn(count).
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import List, Union

import numpy as np

import config
from models.errors import GraphStructureError, InfeasibleParametersError
from models.graph import Graph
from schemas.enumeration import GeneratorConfig
from schemas.reports import GeneratedGraphReport

from .recognition import classify_graph

logger = logging.getLogger(__name__)

SeedLike = Union[int, np.random.SeedSequence]


def _check_parameters(facet_count: int, max_clique: int, new_junction_probability: float) -> None:
    if facet_count < 1:
        raise InfeasibleParametersError(f"facet_count должно быть ≥ 1, получено {facet_count}")
    if max_clique < 2:
        raise InfeasibleParametersError(f"max_clique должно быть ≥ 2, получено {max_clique}")
    if not 0.0 <= new_junction_probability <= 1.0:
        raise InfeasibleParametersError("вероятность нового сочленения вне [0, 1]")


def random_gbg(seed: SeedLike, facet_count: int, max_clique: int,
               new_junction_probability: float = config.GENERATOR_NEW_JUNCTION_PROBABILITY,
               shuffle_labels: bool = False) -> Graph:
    """Связный GBG с facet_count максимальными кликами размера ≤ max_clique."""
    _check_parameters(facet_count, max_clique, new_junction_probability)
    rng = np.random.Generator(np.random.PCG64(seed))

    size = int(rng.integers(2, max_clique + 1))
    facets: List[set] = [set(range(1, size + 1))]
    junctions: List[frozenset] = []
    next_vertex = size + 1

    def fresh(count: int) -> set:
        nonlocal next_vertex
        block = set(range(next_vertex, next_vertex + count))
        next_vertex += count
        return block

    while len(facets) < facet_count:
        used = set().union(*junctions) if junctions else set()
        open_facets = [
            index for index, facet in enumerate(facets)
            if len(facet) >= 2 and facet - used
        ]
        reuse = junctions and (not open_facets or rng.random() >= new_junction_probability)
        if reuse:
            junction = junctions[int(rng.integers(len(junctions)))]
            size = int(rng.integers(len(junction) + 1, max_clique + 1))
            facets.append(set(junction) | fresh(size - len(junction)))
            continue
        facet = facets[open_facets[int(rng.integers(len(open_facets)))]]
        available = sorted(facet - used)
        largest = min(len(available), len(facet) - 1, max_clique - 1)
        junction_size = int(rng.integers(1, largest + 1))
        junction = frozenset(int(v) for v in rng.choice(available, junction_size, replace=False))
        junctions.append(junction)
        size = int(rng.integers(junction_size + 1, max_clique + 1))
        facets.append(set(junction) | fresh(size - junction_size))

    n = next_vertex - 1
    edges = {(u, v) for facet in facets for u, v in combinations(sorted(facet), 2)}
    if shuffle_labels:
        permutation = rng.permutation(n) + 1
        edges = {tuple(sorted((int(permutation[u - 1]), int(permutation[v - 1])))) for u, v in edges}
    graph = Graph(n, sorted(edges))

    certificate = classify_graph(graph)
    if not certificate.is_gbg or certificate.complex.size != facet_count:
        raise GraphStructureError(
            f"генератор построил граф вне класса GBG: {certificate.verdict.value}, {graph!r}"
        )
    return graph


@dataclass(frozen=True)
class GeneratedGraph:
    """Элемент корпуса: граф, его номер и пометка звезды K_{1,m}."""
    index: int
    graph: Graph
    is_star: bool

    def to_report(self) -> GeneratedGraphReport:
        return GeneratedGraphReport(
            index=self.index,
            n=self.graph.n,
            edges=[list(e) for e in self.graph.edges],
            is_star=self.is_star,
        )


def generate_corpus(settings: GeneratorConfig,
                    shuffle_labels: bool = False) -> List[GeneratedGraph]:
    """Детерминированный корпус: по дочернему SeedSequence на граф."""
    from invariants.shapes import is_star

    children = np.random.SeedSequence(settings.seed).spawn(settings.count)
    corpus = []
    for index, child in enumerate(children):
        graph = random_gbg(
            child,
            settings.facets,
            settings.max_clique,
            settings.new_junction_probability,
            shuffle_labels=shuffle_labels,
        )
        corpus.append(GeneratedGraph(index, graph, is_star(graph)))
    logger.info("сгенерировано %d графов (seed=%d)", len(corpus), settings.seed)
    return corpus
