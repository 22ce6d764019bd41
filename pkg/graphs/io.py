"""
Чтение и запись графов.

Текстовый формат: первая строка - n, далее по одной паре "u v" на строку
(вершины 1..n). Пустые строки и комментарии '#' пропускаются.
JSON: {"n": int, "edges": [[u, v], ...]}.
"""
from pathlib import Path
from typing import List, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from models.errors import GraphFormatError
from models.graph import Graph


class GraphDocument(BaseModel):
    """JSON-представление графа."""
    model_config = ConfigDict(extra='forbid')

    n: int = Field(ge=1, title="Число вершин")
    edges: List[Tuple[int, int]] = Field(default_factory=list, title="Рёбра")


def _checked_graph(n: int, numbered_edges: List[Tuple[int, int, int]]) -> Graph:
    """Проверка рёбер с номерами строк и построение графа."""
    seen = set()
    for line, u, v in numbered_edges:
        for w in (u, v):
            if not 1 <= w <= n:
                raise GraphFormatError(line, f"вершина {w} вне диапазона 1..{n}")
        if u == v:
            raise GraphFormatError(line, f"петля в вершине {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(line, f"кратное ребро {{{key[0]}, {key[1]}}}")
        seen.add(key)
    return Graph(n, [(u, v) for _, u, v in numbered_edges])


def parse_graph_text(text: str) -> Graph:
    n = None
    edges: List[Tuple[int, int, int]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        try:
            values = [int(t) for t in tokens]
        except ValueError:
            raise GraphFormatError(number, f"ожидались целые числа, получено {line!r}") from None
        if n is None:
            if len(values) != 1 or values[0] < 1:
                raise GraphFormatError(number, "первая строка должна содержать n ≥ 1")
            n = values[0]
            continue
        if len(values) != 2:
            raise GraphFormatError(number, f"ожидалась пара вершин, получено {line!r}")
        edges.append((number, values[0], values[1]))
    if n is None:
        raise GraphFormatError(1, "пустой файл графа")
    return _checked_graph(n, edges)


def parse_graph_json(text: str) -> Graph:
    try:
        document = GraphDocument.model_validate_json(text)
    except ValidationError as e:
        raise GraphFormatError(0, f"некорректный JSON графа: {e.errors()[0]['msg']}") from e
    # Для JSON номер "строки" - позиция ребра в массиве
    numbered = [(index + 1, u, v) for index, (u, v) in enumerate(document.edges)]
    try:
        return _checked_graph(document.n, numbered)
    except GraphFormatError as e:
        raise GraphFormatError(0, f"ребро №{e.line}: {e.message}") from e


def parse_graph(text: str) -> Graph:
    """Разбор с автоопределением формата."""
    if text.lstrip().startswith('{'):
        return parse_graph_json(text)
    return parse_graph_text(text)


def read_graph(path: Union[str, Path]) -> Graph:
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise GraphFormatError(0, f"не удалось прочитать {path}: {e.strerror}") from e
    return parse_graph(text)


def format_graph_text(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def format_graph_json(g: Graph, indent: int = 2) -> str:
    return GraphDocument(n=g.n, edges=list(g.edges)).model_dump_json(indent=indent)


def write_graph(g: Graph, path: Union[str, Path]) -> None:
    path = Path(path)
    text = format_graph_json(g) if path.suffix == '.json' else format_graph_text(g)
    path.write_text(text, encoding='utf-8')
