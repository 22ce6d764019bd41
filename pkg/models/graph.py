"""
Модель простого неориентированного графа на вершинах 1..n.

Смежность хранится битовыми масками (бит v соответствует вершине v,
бит 0 не используется), рёбра - отсортированным кортежем пар.
Маски - обычные int, поэтому размер графа не ограничен.
"""
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import GraphStructureError, VertexRangeError

Edge = Tuple[int, int]
VertexSet = FrozenSet[int]


def mask_of(vertices: Iterable[int]) -> int:
    """Битовая маска множества вершин."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Вершины маски в порядке возрастания."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertices_of(mask: int) -> VertexSet:
    return frozenset(iter_bits(mask))


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    """
    Неизменяемый простой граф.

    labels[v - 1] - исходная метка вершины v. Для графов, прочитанных
    из файла, метки совпадают с номерами; индуцированные подграфы
    перенумеровываются в 1..|a| с сохранением исходных меток.
    """

    __slots__ = ('_n', '_adj', '_edges', '_labels')

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (),
                 labels: Optional[Sequence[int]] = None):
        if n < 0:
            raise GraphStructureError(f"число вершин должно быть неотрицательным, получено {n}")
        adj = [0] * (n + 1)
        for edge in edges:
            u, v = int(edge[0]), int(edge[1])
            for w in (u, v):
                if not 1 <= w <= n:
                    raise VertexRangeError(f"вершина {w} вне диапазона 1..{n}")
            if u == v:
                raise GraphStructureError(f"петля в вершине {u}")
            if adj[u] >> v & 1:
                raise GraphStructureError(f"кратное ребро {{{min(u, v)}, {max(u, v)}}}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._init(n, adj, labels)

    def _init(self, n: int, adj: List[int], labels: Optional[Sequence[int]]) -> None:
        self._n = n
        self._adj = tuple(adj)
        self._edges = tuple(
            (u, w) for u in range(1, n + 1) for w in iter_bits(adj[u] >> (u + 1) << (u + 1))
        )
        if labels is None:
            self._labels = tuple(range(1, n + 1))
        else:
            if len(labels) != n:
                raise GraphStructureError("число меток не совпадает с числом вершин")
            self._labels = tuple(labels)

    @classmethod
    def _from_masks(cls, n: int, adj: Sequence[int],
                    labels: Optional[Sequence[int]] = None) -> 'Graph':
        """Конструктор из готовых масок смежности (без проверок)."""
        graph = cls.__new__(cls)
        graph._init(n, list(adj), labels)
        return graph

    # ------------------------------------------------------------
    # Основные свойства
    # ------------------------------------------------------------
    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    @property
    def labels(self) -> Tuple[int, ...]:
        return self._labels

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def vertices(self) -> range:
        return range(1, self._n + 1)

    @property
    def all_mask(self) -> int:
        return ((1 << (self._n + 1)) - 1) ^ 1

    @property
    def adjacency(self) -> Tuple[int, ...]:
        return self._adj

    def label(self, v: int) -> int:
        return self._labels[v - 1]

    def labelled_edges(self) -> FrozenSet[FrozenSet[int]]:
        """Рёбра в исходных метках."""
        return frozenset(frozenset((self.label(u), self.label(v))) for u, v in self._edges)

    def check_vertex(self, v: int) -> None:
        if not 1 <= v <= self._n:
            raise VertexRangeError(f"вершина {v} вне диапазона 1..{self._n}")

    def check_vertices(self, vertices: Iterable[int]) -> int:
        """Проверить диапазон и вернуть маску."""
        mask = 0
        for v in vertices:
            self.check_vertex(v)
            mask |= 1 << v
        return mask

    # ------------------------------------------------------------
    # Окрестности и степени
    # ------------------------------------------------------------
    def neighbor_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> VertexSet:
        self.check_vertex(v)
        return vertices_of(self._adj[v])

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self._adj[v].bit_count()

    def is_pendant(self, v: int) -> bool:
        return self.degree(v) == 1

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self._adj[u] >> v & 1)

    def degrees(self) -> Dict[int, int]:
        return {v: self._adj[v].bit_count() for v in self.vertices}

    def is_clique(self, mask: int) -> bool:
        for v in iter_bits(mask):
            if (mask & ~(1 << v)) & ~self._adj[v]:
                return False
        return True

    # ------------------------------------------------------------
    # Связность на масках (горячие циклы переборов)
    # ------------------------------------------------------------
    def component_masks(self, within: Optional[int] = None) -> List[int]:
        """Компоненты связности подграфа, индуцированного маской within."""
        remaining = self.all_mask if within is None else within
        components = []
        while remaining:
            frontier = remaining & -remaining
            component = frontier
            while frontier:
                v = lowest_bit(frontier)
                frontier ^= 1 << v
                fresh = self._adj[v] & remaining & ~component
                component |= fresh
                frontier |= fresh
            components.append(component)
            remaining &= ~component
        return components

    def count_components(self, within: Optional[int] = None) -> int:
        return len(self.component_masks(within))

    def is_connected(self) -> bool:
        return self._n > 0 and self.count_components() == 1

    # ------------------------------------------------------------
    # Сравнение и отображение
    # ------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={list(self._edges)})"
