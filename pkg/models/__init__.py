"""
Модуль models - модели данных: граф, кликовый комплекс, мономиальные
идеалы, таблицы Бетти и иерархия исключений.
"""
from .betti import BettiTable
from .complex import CliqueComplex
from .errors import (
    BeiError,
    EdgeNotFoundError,
    GraphFormatError,
    GraphStructureError,
    InfeasibleParametersError,
    NotChordalError,
    NotConnectedError,
    NotGeneralizedBlockGraphError,
    NotInCutPointFamilyError,
    NotMinimalCutSetError,
    ResourceLimit,
    VertexRangeError,
)
from .graph import Graph, VertexSet
from .ideal import MonomialIdeal, RingVariable, StanleyReisnerComplex

__all__ = [
    'BettiTable',
    'CliqueComplex',
    'Graph',
    'VertexSet',
    'MonomialIdeal',
    'RingVariable',
    'StanleyReisnerComplex',
    'BeiError',
    'EdgeNotFoundError',
    'GraphFormatError',
    'GraphStructureError',
    'InfeasibleParametersError',
    'NotChordalError',
    'NotConnectedError',
    'NotGeneralizedBlockGraphError',
    'NotInCutPointFamilyError',
    'NotMinimalCutSetError',
    'ResourceLimit',
    'VertexRangeError',
]
