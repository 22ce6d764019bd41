"""
Допустимые пути и начальный идеал in(J_G) относительно
лексикографического порядка x_1 > ... > x_n > y_1 > ... > y_n.

Путь i = i_0, i_1, ..., i_r = j (i < j) допустим, если все внутренние
вершины меньше i или больше j и никакая собственная подпоследовательность
внутренних вершин не образует путь от i к j. Последнее условие
равносильно отсутствию хорд, т.е. путь индуцированный.
"""
from dataclasses import dataclass
from typing import List, Tuple

from models.graph import Graph, iter_bits
from models.ideal import MonomialIdeal, RingVariable


@dataclass(frozen=True)
class AdmissiblePath:
    vertices: Tuple[int, ...]

    @property
    def i(self) -> int:
        return self.vertices[0]

    @property
    def j(self) -> int:
        return self.vertices[-1]

    @property
    def interior(self) -> Tuple[int, ...]:
        return self.vertices[1:-1]

    def u_mask(self, n: int) -> int:
        """u_π = Π_{v > j} x_v · Π_{v < i} y_v по внутренним вершинам."""
        mask = 0
        for v in self.interior:
            if v > self.j:
                mask |= 1 << RingVariable('x', v).bit(n)
            else:
                mask |= 1 << RingVariable('y', v).bit(n)
        return mask

    def leading_mask(self, n: int) -> int:
        """Старший моном u_π x_i y_j элемента u_π (x_i y_j - x_j y_i)."""
        return (self.u_mask(n)
                | 1 << RingVariable('x', self.i).bit(n)
                | 1 << RingVariable('y', self.j).bit(n))


def admissible_paths(g: Graph) -> List[AdmissiblePath]:
    """
    Все допустимые пути, упорядоченные по (i, j, вершины).
    Поиск в глубину от i; blocked - замкнутые окрестности всех вершин
    пути, кроме последней, поэтому каждый найденный путь индуцированный.
    """
    result: List[AdmissiblePath] = []
    for i in g.vertices:
        for j in range(i + 1, g.n + 1):
            allowed = sum(1 << v for v in g.vertices if v < i or v > j)
            found: List[Tuple[int, ...]] = []

            def extend(path: List[int], blocked: int) -> None:
                last = path[-1]
                neighbors = g.neighbor_mask(last)
                if neighbors >> j & 1 and not blocked >> j & 1:
                    found.append(tuple(path) + (j,))
                    return
                closed_last = neighbors | 1 << last
                for w in iter_bits(neighbors & allowed & ~blocked):
                    path.append(w)
                    extend(path, blocked | closed_last)
                    path.pop()

            extend([i], 0)
            result.extend(AdmissiblePath(p) for p in sorted(found))
    return result


def initial_ideal(g: Graph) -> MonomialIdeal:
    """in(J_G), порождённый старшими мономами элементов базиса Грёбнера."""
    return MonomialIdeal(g.n, (path.leading_mask(g.n) for path in admissible_paths(g)))
