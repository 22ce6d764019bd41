"""
Модуль invariants - инварианты, разложение, цветки, классификатор
и оценки регулярности.
"""
from .bounds import bounds_report, classify_unique_extremal, extremal_prediction
from .decomposition import decompose
from .flowers import find_flower
from .paths import longest_induced_path
from .products import betti_polynomial_product
from .reductions import block_graph_reduction, leaf_junction
from .report import invariant_report

__all__ = [
    'invariant_report',
    'longest_induced_path',
    'decompose',
    'find_flower',
    'classify_unique_extremal',
    'extremal_prediction',
    'bounds_report',
    'betti_polynomial_product',
    'block_graph_reduction',
    'leaf_junction',
]
