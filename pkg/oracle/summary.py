"""
Сводка оракула: reg, pd и экстремальные числа Бетти S/in(J_G).

in(J_G) бесквадратный, поэтому эти величины у S/in(J_G) и S/J_G
совпадают; полные таблицы могут различаться.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Optional

from models.betti import BettiTable, Position
from models.graph import Graph
from schemas.oracle import OracleConfig
from schemas.reports import OracleReport

from .hochster import betti_table
from .paths import initial_ideal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleSummary:
    table: BettiTable
    field_char: int
    variables: int

    @property
    def reg(self) -> int:
        return self.table.reg

    @property
    def pd(self) -> int:
        return self.table.pd

    @property
    def extremal(self) -> Dict[Position, int]:
        return self.table.extremal()

    @property
    def unique_extremal(self) -> bool:
        return self.table.has_unique_extremal

    def to_report(self) -> OracleReport:
        return OracleReport(
            betti=self.table.rows(),
            reg=self.reg,
            pd=self.pd,
            extremal=[[i, j, value] for (i, j), value in sorted(self.extremal.items())],
            field_char=self.field_char,
            variables=self.variables,
        )


def oracle_summary(g: Graph, settings: Optional[OracleConfig] = None) -> OracleSummary:
    settings = settings or OracleConfig()
    ideal = initial_ideal(g)
    logger.info("in(J_G): %d образующих", len(ideal.generators))
    return OracleSummary(betti_table(ideal, settings), settings.field_char, ideal.variable_count)


def compare_characteristics(g: Graph, settings: Optional[OracleConfig] = None,
                            other_char: int = 2) -> bool:
    """Совпадение таблиц в характеристике settings.field_char и other_char."""
    settings = settings or OracleConfig()
    first = oracle_summary(g, settings)
    second = oracle_summary(g, settings.model_copy(update={'field_char': other_char}))
    if first.table != second.table:
        logger.warning(
            "таблицы Бетти различаются в характеристиках %d и %d", settings.field_char, other_char
        )
        return False
    return True
