"""
Модуль oracle - точная таблица Бетти S/in(J_G) по формуле Хохстера.
"""
from .hochster import betti_table
from .paths import admissible_paths, initial_ideal
from .summary import oracle_summary

__all__ = ['admissible_paths', 'initial_ideal', 'betti_table', 'oracle_summary']
