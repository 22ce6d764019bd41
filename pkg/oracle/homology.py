"""
Приведённые гомологии симплициального комплекса над полем.

Ранги граничных матриц считаются точно: над QQ для характеристики 0
и над GF(p) для простого p.
"""
from typing import Dict, List, Sequence

from sympy import GF, QQ
from sympy.polys.matrices import DomainMatrix

from models.graph import iter_bits


def coefficient_field(field_char: int):
    return QQ if field_char == 0 else GF(field_char)


def boundary_rank(upper: Sequence[int], lower: Sequence[int], domain) -> int:
    """
    Ранг ∂: C(upper) -> C(lower). Грани - маски; знак при удалении
    t-й по возрастанию вершины равен (-1)^t.
    """
    if not upper or not lower:
        return 0
    index = {face: row for row, face in enumerate(lower)}
    one, minus_one = domain(1), domain(-1)
    entries: Dict[int, Dict[int, object]] = {}
    for column, face in enumerate(upper):
        for t, b in enumerate(iter_bits(face)):
            row = index[face & ~(1 << b)]
            entries.setdefault(row, {})[column] = minus_one if t % 2 else one
    return DomainMatrix(entries, (len(lower), len(upper)), domain).rank()


def reduced_homology(layers: List[List[int]], domain) -> Dict[int, int]:
    """
    dim H̃_k для всех k с ненулевой гомологией.

    layers[s] - грани из s вершин (layers[0] = [пустая грань]);
    dim H̃_k = f_k - rank ∂_k - rank ∂_{k+1}, k = s - 1.
    """
    ranks = [0]
    for s in range(1, len(layers)):
        ranks.append(boundary_rank(layers[s], layers[s - 1], domain))
    ranks.append(0)
    result = {}
    for s, layer in enumerate(layers):
        dim = len(layer) - ranks[s] - ranks[s + 1]
        if dim:
            result[s - 1] = dim
    return result
