"""
Модуль chordal - хордальность, максимальные клики и порядок листьев.
"""
from .cliques import free_and_internal_vertices, leaf_order, maximal_cliques
from .recognition import is_chordal

__all__ = ['is_chordal', 'maximal_cliques', 'leaf_order', 'free_and_internal_vertices']
