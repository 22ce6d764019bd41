"""
Таблица градуированных чисел Бетти β_{i,j} и извлекаемые из неё величины.
"""
from typing import Dict, Iterable, List, Mapping, Tuple

import numpy as np

Position = Tuple[int, int]


class BettiTable:
    """
    Разреженная таблица чисел Бетти: (i, j) -> β_{i,j} > 0.

    Многочлен Бетти B(s, t) = Σ β_{i,j} s^i t^j; отсутствующие позиции - нули.
    """

    __slots__ = ('_values',)

    def __init__(self, values: Mapping[Position, int]):
        cleaned = {}
        for (i, j), value in values.items():
            if value < 0:
                raise ValueError(f"отрицательное число Бетти в позиции ({i}, {j})")
            if value:
                if j < i or i < 0:
                    raise ValueError(f"ненулевое β в недопустимой позиции ({i}, {j})")
                cleaned[(int(i), int(j))] = int(value)
        self._values: Dict[Position, int] = dict(sorted(cleaned.items()))

    @classmethod
    def trivial(cls) -> 'BettiTable':
        """Таблица кольца S/0: единственное β_{0,0} = 1."""
        return cls({(0, 0): 1})

    # ------------------------------------------------------------
    # Доступ
    # ------------------------------------------------------------
    def __getitem__(self, position: Position) -> int:
        return self._values.get(position, 0)

    def items(self) -> Iterable[Tuple[Position, int]]:
        return self._values.items()

    def as_dict(self) -> Dict[Position, int]:
        return dict(self._values)

    def rows(self) -> List[List[int]]:
        """Строки [i, j, β] в порядке (i, j)."""
        return [[i, j, value] for (i, j), value in self._values.items()]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self._values == other._values

    def __hash__(self) -> int:
        return hash(tuple(self._values.items()))

    def __repr__(self) -> str:
        return f"BettiTable({self._values})"

    # ------------------------------------------------------------
    # Инварианты
    # ------------------------------------------------------------
    @property
    def reg(self) -> int:
        """Регулярность: max(j - i)."""
        return max((j - i for i, j in self._values), default=0)

    @property
    def pd(self) -> int:
        """Проективная размерность: max i."""
        return max((i for i, _ in self._values), default=0)

    def extremal(self) -> Dict[Position, int]:
        """
        Экстремальные числа Бетти: β_{i,j} ≠ 0 и β_{r,s} = 0 для всех
        (r, s) ≠ (i, j) с r ≥ i, s ≥ j.
        """
        result = {}
        for (i, j), value in self._values.items():
            dominated = any(
                r >= i and s >= j and (r, s) != (i, j) for r, s in self._values
            )
            if not dominated:
                result[(i, j)] = value
        return result

    @property
    def has_unique_extremal(self) -> bool:
        """Единственное экстремальное число Бетти ⟺ β_{pd, pd+reg} ≠ 0."""
        return self[(self.pd, self.pd + self.reg)] != 0

    # ------------------------------------------------------------
    # Представление массивом: строка j - i, столбец i
    # ------------------------------------------------------------
    def to_array(self) -> np.ndarray:
        array = np.zeros((self.reg + 1, self.pd + 1), dtype=np.int64)
        for (i, j), value in self._values.items():
            array[j - i, i] = value
        return array

    @classmethod
    def from_array(cls, array: np.ndarray) -> 'BettiTable':
        values = {}
        for row, col in zip(*np.nonzero(array)):
            values[(int(col), int(row + col))] = int(array[row, col])
        return cls(values)

    def render(self) -> str:
        """Таблица в стиле Macaulay2: строки j - i, столбцы i, '.' для нуля."""
        array = self.to_array()
        totals = array.sum(axis=0)
        width = max(len(str(int(x))) for x in np.append(array.ravel(), totals)) + 1
        label_width = max(len("total:"), len(f"{array.shape[0] - 1}:"))

        def line(label: str, cells: Iterable[str]) -> str:
            return label.rjust(label_width) + "".join(c.rjust(width) for c in cells)

        lines = [
            line("", (str(i) for i in range(array.shape[1]))),
            line("total:", (str(int(t)) for t in totals)),
        ]
        for row in range(array.shape[0]):
            lines.append(line(f"{row}:", (str(int(x)) if x else "." for x in array[row])))
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.render()
