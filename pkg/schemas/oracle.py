"""
Схема параметров оракула таблиц Бетти.
"""
from pydantic import Field, field_validator
from sympy import isprime

import config
from .base import ConfigSection


class OracleConfig(ConfigSection):
    """Параметры точного вычисления таблицы Бетти S/in(J_G)."""

    field_char: int = Field(
        default=config.ORACLE_FIELD_CHAR,
        ge=0,
        title="Характеристика поля",
        description="0 - рациональные числа, иначе простое p (GF(p))"
    )
    max_vars: int = Field(
        default=config.ORACLE_MAX_VARS,
        ge=2,
        le=64,
        title="Макс. число переменных",
        description="Предел 2n для кольца S; при превышении - ResourceLimit"
    )
    prune: bool = Field(
        default=config.ORACLE_PRUNE,
        title="Отсечение конусов",
        description="Пропускать W, для которых Δ|_W - конус (гомологии нулевые)"
    )
    workers: int = Field(
        default=config.ORACLE_WORKERS,
        ge=1,
        le=256,
        title="Процессы",
        description="Число процессов для перебора подмножеств W"
    )
    time_budget: float = Field(
        default=config.ORACLE_TIME_BUDGET,
        gt=0,
        title="Бюджет времени",
        description="Секунды на один расчёт; при превышении - ResourceLimit"
    )
    max_subsets: int = Field(
        default=config.ORACLE_MAX_SUBSETS,
        ge=1,
        title="Макс. число подмножеств",
        description="Предел числа рассматриваемых подмножеств W"
    )
    chunk_size: int = Field(
        default=config.ORACLE_CHUNK_SIZE,
        ge=1,
        title="Размер порции",
        description="Число подмножеств W в одной статической порции"
    )

    @field_validator('field_char')
    @classmethod
    def _check_char(cls, value: int) -> int:
        if value != 0 and not isprime(value):
            raise ValueError(f"характеристика должна быть 0 или простым числом, получено {value}")
        return value
