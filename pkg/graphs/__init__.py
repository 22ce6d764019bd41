"""
Модуль graphs - построения над графами, чтение и запись, именованные семейства.
"""
from .constructions import (
    complete_edge_neighborhoods,
    connected_components,
    cut_edge_constructions,
    delete_edge,
    delete_vertices,
    induced_subgraph,
    merge_at_cutset,
    saturate_vertex,
)
from .families import complete_graph, cycle_graph, flower_graph, path_graph, star_graph
from .io import parse_graph, read_graph, write_graph

__all__ = [
    'complete_edge_neighborhoods',
    'connected_components',
    'cut_edge_constructions',
    'delete_edge',
    'delete_vertices',
    'induced_subgraph',
    'merge_at_cutset',
    'saturate_vertex',
    'complete_graph',
    'cycle_graph',
    'flower_graph',
    'path_graph',
    'star_graph',
    'parse_graph',
    'read_graph',
    'write_graph',
]
