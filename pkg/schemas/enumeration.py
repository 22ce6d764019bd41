"""
Схемы для экспоненциальных переборов и генератора графов.
"""
from pydantic import Field

import config
from .base import ConfigSection


class EnumerationConfig(ConfigSection):
    """Пределы для экспоненциальных переборов."""

    cut_point_max_n: int = Field(
        default=config.CUT_POINT_MAX_N,
        ge=1,
        le=64,
        title="Предел n для C(G)",
        description="Максимальное число вершин для перечисления семейства C(G)"
    )
    induced_path_max_n: int = Field(
        default=config.INDUCED_PATH_MAX_N,
        ge=1,
        le=256,
        title="Предел n для l(G)",
        description="Максимальное число вершин для поиска длиннейшего индуцированного пути"
    )
    allow_large: bool = Field(
        default=False,
        title="Снять пределы",
        description="Явное разрешение переборов выше пределов"
    )


class GeneratorConfig(ConfigSection):
    """Параметры генератора обобщённых блочных графов."""

    seed: int = Field(
        default=config.GENERATOR_SEED,
        ge=0,
        title="Зерно",
        description="Зерно генератора PCG64"
    )
    facets: int = Field(
        default=config.GENERATOR_FACETS,
        ge=1,
        le=1000,
        title="Число клик",
        description="Число максимальных клик в каждом графе"
    )
    max_clique: int = Field(
        default=config.GENERATOR_MAX_CLIQUE,
        ge=2,
        le=64,
        title="Макс. размер клики",
        description="Верхняя граница размера максимальной клики"
    )
    count: int = Field(
        default=config.GENERATOR_COUNT,
        ge=1,
        le=100000,
        title="Число графов",
        description="Размер генерируемого корпуса"
    )
    new_junction_probability: float = Field(
        default=config.GENERATOR_NEW_JUNCTION_PROBABILITY,
        ge=0.0,
        le=1.0,
        title="Вероятность нового сочленения",
        description="Вероятность создать новое сочленение вместо приклеивания к существующему"
    )
