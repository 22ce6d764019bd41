"""
Модуль cli - командная строка: analyze, verify, oracle, decompose, gen.
"""
from .app import build_parser, run, setup_logging
from .verify import verify_graph

__all__ = ['build_parser', 'run', 'setup_logging', 'verify_graph']
