"""
Модуль cutsets - минимальные разрезы, семейство C(G) и минимальные простые P_T(G).
"""
from .primes import minimal_prime_description
from .separators import cut_point_sets, minimal_cut_sets, minimal_cut_sets_gbg

__all__ = ['minimal_cut_sets', 'minimal_cut_sets_gbg', 'cut_point_sets', 'minimal_prime_description']
