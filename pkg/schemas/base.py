"""
Базовые классы и утилиты для Pydantic-схем конфигурации и отчётов.
"""
from pydantic import BaseModel, ConfigDict
import json
from pathlib import Path


class ConfigSection(BaseModel):
    """
    Базовый класс для секций конфигурации.
    Значения проверяются при присваивании, лишние ключи запрещены.
    """
    model_config = ConfigDict(
        validate_assignment=True,  # Валидация при присваивании
        extra='forbid',  # Запрет дополнительных полей
    )


class ReportModel(BaseModel):
    """
    Базовый класс для отчётов.
    Отчёты неизменяемы; ключи JSON совпадают с именами полей.
    """
    model_config = ConfigDict(
        frozen=True,
        extra='forbid',
    )

    def to_json(self, indent: int = 2) -> str:
        return self.model_dump_json(indent=indent)


def save_config_to_file(config: BaseModel, filepath: Path) -> None:
    """Сохранить конфигурацию в JSON файл."""
    with open(filepath, 'w', encoding='utf-8') as f:
        json.dump(config.model_dump(), f, indent=2, ensure_ascii=False)


def load_config_from_file(config_class: type, filepath: Path) -> BaseModel:
    """Загрузить конфигурацию из JSON файла."""
    with open(filepath, 'r', encoding='utf-8') as f:
        data = json.load(f)
    return config_class(**data)
