"""
Таблица Бетти S/I по формуле Хохстера:
β_{i,W}(S/I_Δ) = dim H̃_{|W|-i-1}(Δ|_W), β_{i,j} = Σ_{|W|=j} β_{i,W}.

Если W не равно объединению образующих, лежащих в W, то Δ|_W - конус
и его гомологии нулевые. С отсечением перебираются только элементы
решётки НОК (объединения образующих), включая W = ∅.
"""
import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple

from models.betti import BettiTable, Position
from models.errors import ResourceLimit
from models.ideal import MonomialIdeal, StanleyReisnerComplex
from schemas.oracle import OracleConfig

from .homology import coefficient_field, reduced_homology

logger = logging.getLogger(__name__)

ChunkTask = Tuple[int, Tuple[int, ...], Tuple[int, ...], int, float]


def lcm_lattice(ideal: MonomialIdeal, max_subsets: int) -> List[int]:
    """Все объединения подмножеств образующих, по возрастанию масок."""
    lattice = {0}
    for generator in ideal.generators:
        lattice |= {w | generator for w in lattice}
        if len(lattice) > max_subsets:
            raise ResourceLimit(
                f"решётка НОК превышает предел {max_subsets} подмножеств", max_subsets, len(lattice)
            )
    return sorted(lattice)


def all_subsets(ideal: MonomialIdeal, max_subsets: int) -> List[int]:
    """Все подмножества 2n переменных (режим без отсечения)."""
    count = 1 << ideal.variable_count
    if count > max_subsets:
        raise ResourceLimit(f"2^{ideal.variable_count} подмножеств превышает предел {max_subsets}",
                            max_subsets, count)
    return list(range(count))


def _betti_chunk(task: ChunkTask) -> Dict[Position, int]:
    n, generators, subsets, field_char, deadline = task
    complex_ = StanleyReisnerComplex(MonomialIdeal(n, generators))
    domain = coefficient_field(field_char)
    partial: Counter = Counter()
    for w in subsets:
        if time.time() > deadline:
            raise ResourceLimit("исчерпан бюджет времени оракула", deadline)
        size = w.bit_count()
        for k, dim in reduced_homology(complex_.faces(w), domain).items():
            partial[(size - 1 - k, size)] += dim
    return dict(partial)


def _chunks(subsets: Sequence[int], size: int) -> List[Tuple[int, ...]]:
    return [tuple(subsets[k:k + size]) for k in range(0, len(subsets), size)]


def betti_table(ideal: MonomialIdeal, settings: Optional[OracleConfig] = None) -> BettiTable:
    """
    Точная градуированная таблица Бетти S/I.

    Подмножества W делятся на статические порции; порции обрабатываются
    последовательно или в пуле процессов, суммы не зависят от числа
    процессов. При превышении любого предела - ResourceLimit.
    """
    settings = settings or OracleConfig()
    if ideal.variable_count > settings.max_vars:
        raise ResourceLimit(
            f"{ideal.variable_count} переменных превышает предел {settings.max_vars}",
            settings.max_vars, ideal.variable_count,
        )
    started = time.time()
    deadline = started + settings.time_budget
    if settings.prune:
        subsets = lcm_lattice(ideal, settings.max_subsets)
    else:
        subsets = all_subsets(ideal, settings.max_subsets)

    tasks: List[ChunkTask] = [
        (ideal.n, ideal.generators, chunk, settings.field_char, deadline)
        for chunk in _chunks(subsets, settings.chunk_size)
    ]
    totals: Counter = Counter()
    if settings.workers == 1 or len(tasks) == 1:
        for task in tasks:
            totals.update(_betti_chunk(task))
    else:
        with ProcessPoolExecutor(max_workers=settings.workers) as pool:
            for partial in pool.map(_betti_chunk, tasks):
                totals.update(partial)

    logger.info(
        "Хохстер: %d подмножеств W (%s), %d порций, %.2f с",
        len(subsets), "с отсечением" if settings.prune else "без отсечения",
        len(tasks), time.time() - started,
    )
    return BettiTable(totals)
