"""
Произведение многочленов Бетти.

В массиве BettiTable.to_array() элемент [j - i, i] - коэффициент при
(st)^i t^(j-i), поэтому произведение многочленов - двумерная свёртка.
"""
from typing import Iterable

import numpy as np
from scipy.signal import convolve2d

from models.betti import BettiTable


def betti_polynomial_product(tables: Iterable[BettiTable]) -> BettiTable:
    """B_1(s, t) · ... · B_r(s, t); пустое произведение - тривиальная таблица."""
    result = np.ones((1, 1), dtype=np.int64)
    for table in tables:
        result = convolve2d(result, table.to_array())
    return BettiTable.from_array(result)
