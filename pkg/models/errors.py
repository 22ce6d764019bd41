"""
Иерархия исключений пакета.

Все ошибки наследуются от BeiError; CLI отображает их в коды возврата
(см. config.EXIT_*).
"""
from typing import Any, Optional


class BeiError(Exception):
    """Базовая ошибка вычислений с биномиальными рёберными идеалами."""


class GraphFormatError(BeiError):
    """Ошибка разбора файла графа (line - номер строки, 0 для JSON)."""

    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"строка {line}: {message}" if line else message)

    def __reduce__(self):
        return (type(self), (self.line, self.message))


class VertexRangeError(BeiError):
    """Вершина вне диапазона 1..n."""


class GraphStructureError(BeiError):
    """Петля, кратное ребро или иное нарушение простоты графа."""


class EdgeNotFoundError(BeiError):
    """Операция над ребром, которого нет в графе."""


class NotChordalError(BeiError):
    """Операция определена только для хордальных графов."""


class NotGeneralizedBlockGraphError(BeiError):
    """Операция определена только для обобщённых блочных графов."""


class NotMinimalCutSetError(BeiError):
    """Множество не является минимальным разрезом."""


class NotInCutPointFamilyError(BeiError):
    """Множество T не принадлежит семейству C(G)."""


class NotConnectedError(BeiError):
    """Операция определена только для связных графов."""


class InfeasibleParametersError(BeiError):
    """Недопустимые параметры генератора."""


class ResourceLimit(BeiError):
    """
    Превышен предел или бюджет вычислений.
    Частичные результаты никогда не возвращаются.
    """

    def __init__(self, message: str, limit: Any = None, value: Optional[Any] = None):
        self.message = message
        self.limit = limit
        self.value = value
        super().__init__(message)

    def __reduce__(self):
        # Исключение пересекает границу процессов в пуле оракула
        return (type(self), (self.message, self.limit, self.value))
