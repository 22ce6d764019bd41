"""
Схемы для параметров вывода и логирования.
"""
from pydantic import Field
from typing import Literal

import config
from .base import ConfigSection


class OutputConfig(ConfigSection):
    """Параметры вывода отчётов."""

    format: Literal["json", "table"] = Field(
        default=config.OUTPUT_FORMAT,
        title="Формат",
        description="json: машиночитаемый отчёт; table: таблица для человека"
    )
    indent: int = Field(
        default=config.OUTPUT_INDENT,
        ge=0,
        le=8,
        title="Отступ JSON",
        description="Число пробелов отступа в JSON"
    )


class LoggingConfig(ConfigSection):
    """Параметры логирования."""

    level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(
        default=config.LOG_LEVEL,
        title="Уровень",
        description="Минимальный уровень сообщений"
    )
    format: str = Field(
        default=config.LOG_FORMAT,
        title="Формат",
        description="Формат строки лога (logging.Formatter)"
    )
