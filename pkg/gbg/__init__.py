"""
Модуль gbg - распознавание и генерация обобщённых блочных графов.
"""
from .generator import generate_corpus, random_gbg
from .recognition import GbgCertificate, Verdict, classify_graph

__all__ = ['Verdict', 'GbgCertificate', 'classify_graph', 'random_gbg', 'generate_corpus']
