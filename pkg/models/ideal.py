"""
Кольцо S = K[x_1..x_n, y_1..y_n], бесквадратные мономиальные идеалы
и их комплексы Стенли-Райснера.

Моном кодируется маской по 2n битам: бит k < n - переменная x_{k+1},
бит k ≥ n - переменная y_{k-n+1}. Меньший бит - старшая переменная
лексикографического порядка x_1 > ... > x_n > y_1 > ... > y_n.
"""
from dataclasses import dataclass
from typing import Iterable, List, Literal, Tuple

from .graph import iter_bits


@dataclass(frozen=True)
class RingVariable:
    """Переменная кольца S."""
    kind: Literal['x', 'y']
    index: int

    def bit(self, n: int) -> int:
        return self.index - 1 if self.kind == 'x' else n + self.index - 1

    @classmethod
    def from_bit(cls, bit: int, n: int) -> 'RingVariable':
        if bit < n:
            return cls('x', bit + 1)
        return cls('y', bit - n + 1)

    def __str__(self) -> str:
        return f"{self.kind}_{self.index}"


def monomial_string(mask: int, n: int) -> str:
    """Моном по маске: 'x_1*y_2'; пустой моном - '1'."""
    if not mask:
        return "1"
    return "*".join(str(RingVariable.from_bit(b, n)) for b in iter_bits(mask))


def minimalize(supports: Iterable[int]) -> Tuple[int, ...]:
    """Оставить минимальные по включению маски (антицепь)."""
    unique = sorted(set(supports), key=lambda m: (m.bit_count(), m))
    kept: List[int] = []
    for mask in unique:
        if not any(g & mask == g for g in kept):
            kept.append(mask)
    return tuple(sorted(kept))


class MonomialIdeal:
    """Бесквадратный мономиальный идеал с минимальной системой образующих."""

    __slots__ = ('_n', '_generators')

    def __init__(self, n: int, supports: Iterable[int]):
        self._n = n
        self._generators = minimalize(supports)

    @property
    def n(self) -> int:
        """Число вершин графа; в кольце 2n переменных."""
        return self._n

    @property
    def variable_count(self) -> int:
        return 2 * self._n

    @property
    def generators(self) -> Tuple[int, ...]:
        return self._generators

    def generator_strings(self) -> List[str]:
        return [monomial_string(g, self._n) for g in self._generators]

    def contains(self, monomial: int) -> bool:
        """Принадлежность бесквадратного монома идеалу."""
        return any(g & monomial == g for g in self._generators)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self._n == other._n and self._generators == other._generators

    def __hash__(self) -> int:
        return hash((self._n, self._generators))

    def __repr__(self) -> str:
        return f"MonomialIdeal({', '.join(self.generator_strings())})"


class StanleyReisnerComplex:
    """
    Комплекс Δ с I_Δ = I: грани - бесквадратные мономы вне идеала,
    образующие идеала - минимальные не-грани.
    """

    def __init__(self, ideal: MonomialIdeal):
        self.ideal = ideal
        self._by_variable: List[List[int]] = [[] for _ in range(ideal.variable_count)]
        for g in ideal.generators:
            for b in iter_bits(g):
                self._by_variable[b].append(g)

    def is_face(self, mask: int) -> bool:
        return not self.ideal.contains(mask)

    def closure(self, w: int) -> int:
        """Объединение образующих, лежащих в W."""
        union = 0
        for g in self.ideal.generators:
            if g & w == g:
                union |= g
        return union

    def is_cone(self, w: int) -> bool:
        """
        Δ|_W - конус тогда и только тогда, когда некоторая вершина W
        не входит ни в одну образующую внутри W.
        """
        return self.closure(w) != w

    def faces(self, w: int) -> List[List[int]]:
        """
        Грани Δ|_W по размерам: result[s] - грани из s вершин
        (result[0] = [пустая грань]), каждая в лексикографическом порядке.
        """
        vertices = list(iter_bits(w))
        result: List[List[int]] = [[0]]

        def extend(face: int, start: int, size: int) -> None:
            for position in range(start, len(vertices)):
                b = vertices[position]
                candidate = face | 1 << b
                if any(g & candidate == g for g in self._by_variable[b]):
                    continue
                if len(result) <= size + 1:
                    result.append([])
                result[size + 1].append(candidate)
                extend(candidate, position + 1, size + 1)

        extend(0, 0, 0)
        for layer in result:
            layer.sort(key=lambda m: tuple(iter_bits(m)))
        return result
