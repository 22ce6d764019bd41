"""
Pydantic-схемы конфигурации и отчётов.

Структура:
- AppConfig - главная конфигурация, агрегирует все секции
- Каждая секция в отдельном модуле
- reports - схемы JSON-отчётов CLI
"""
import os
from pathlib import Path
from typing import Optional

from pydantic import Field

import config
from .base import ConfigSection, ReportModel, save_config_to_file, load_config_from_file
from .enumeration import EnumerationConfig, GeneratorConfig
from .oracle import OracleConfig
from .output import LoggingConfig, OutputConfig


class AppConfig(ConfigSection):
    """
    Главная конфигурация приложения.
    Агрегирует все секции конфигурации.
    """

    oracle: OracleConfig = Field(
        default_factory=OracleConfig,
        title="Оракул"
    )
    enumeration: EnumerationConfig = Field(
        default_factory=EnumerationConfig,
        title="Переборы"
    )
    generator: GeneratorConfig = Field(
        default_factory=GeneratorConfig,
        title="Генератор"
    )
    output: OutputConfig = Field(
        default_factory=OutputConfig,
        title="Вывод"
    )
    logging: LoggingConfig = Field(
        default_factory=LoggingConfig,
        title="Логирование"
    )

    def save(self, filepath: Optional[Path] = None) -> None:
        """Сохранить конфигурацию в файл."""
        if filepath is None:
            filepath = Path(__file__).parent.parent / "saved_config.json"
        save_config_to_file(self, filepath)

    @classmethod
    def load(cls, filepath: Optional[Path] = None) -> 'AppConfig':
        """Загрузить конфигурацию из файла."""
        if filepath is None:
            filepath = Path(__file__).parent.parent / "saved_config.json"
        if not filepath.exists():
            return cls()  # Возвращаем дефолтную конфигурацию
        return load_config_from_file(cls, filepath)

    def apply_environment(self) -> 'AppConfig':
        """Переменная BEI_MAX_VARS переопределяет oracle.max_vars."""
        value = os.environ.get(config.ENV_MAX_VARS)
        if value is not None:
            self.oracle.max_vars = int(value)
        return self

    @classmethod
    def from_environment(cls, filepath: Optional[Path] = None) -> 'AppConfig':
        return cls.load(filepath).apply_environment()


# Экспортируем все классы
__all__ = [
    'AppConfig',
    'ConfigSection',
    'ReportModel',
    'OracleConfig',
    'EnumerationConfig',
    'GeneratorConfig',
    'OutputConfig',
    'LoggingConfig',
    'save_config_to_file',
    'load_config_from_file',
]
