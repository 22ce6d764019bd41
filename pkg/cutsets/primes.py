"""
Описание минимальных простых P_T(G) = (x_i, y_i : i ∈ T) + J_{G̃_1} + ... + J_{G̃_c},
где G̃_j - полный граф на j-й компоненте G[T̄].
"""
from itertools import combinations
from typing import Iterable

from models.errors import NotInCutPointFamilyError
from models.graph import Graph, vertices_of
from schemas.reports import MinimalPrimeDescription

from .separators import is_in_cut_point_family


def minimal_prime_description(g: Graph, t: Iterable[int]) -> MinimalPrimeDescription:
    t = sorted(set(t))
    mask = g.check_vertices(t)
    if not is_in_cut_point_family(g, t):
        raise NotInCutPointFamilyError(f"{t} не принадлежит C(G)")
    label = g.label
    variables = []
    for i in t:
        variables += [f"x_{label(i)}", f"y_{label(i)}"]
    components = [sorted(label(v) for v in vertices_of(c)) for c in g.component_masks(g.all_mask & ~mask)]
    components.sort(key=lambda c: c[0])
    minors = [
        f"x_{i}y_{j}-x_{j}y_{i}"
        for component in components
        for i, j in combinations(component, 2)
    ]
    return MinimalPrimeDescription(
        t=[label(i) for i in t],
        variables=variables,
        components=components,
        minors=minors,
    )
