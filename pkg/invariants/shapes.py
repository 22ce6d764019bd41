"""
Распознавание простых форм: полный граф, путь, звезда, дерево, гусеница,
цветок F_{h,k}(v).
"""
from typing import Optional, Tuple

from models.graph import Graph, iter_bits


def is_complete(g: Graph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


def is_tree(g: Graph) -> bool:
    return g.is_connected() and g.edge_count == g.n - 1


def is_path(g: Graph) -> bool:
    """P_n, n ≥ 1."""
    return is_tree(g) and all(g.neighbor_mask(v).bit_count() <= 2 for v in g.vertices)


def is_star(g: Graph) -> bool:
    """K_{1,m}, m ≥ 1 (K_2 считается звездой)."""
    if g.n < 2 or not is_tree(g):
        return False
    return any(g.neighbor_mask(v).bit_count() == g.n - 1 for v in g.vertices)


def is_caterpillar(g: Graph) -> bool:
    """Дерево, невисячие вершины которого индуцируют путь (возможно пустой)."""
    if not is_tree(g):
        return False
    spine = 0
    for v in g.vertices:
        if g.neighbor_mask(v).bit_count() != 1:
            spine |= 1 << v
    if not spine:
        return True
    # Индуцированный подграф дерева - лес; путь ⟺ связен и степени ≤ 2
    if g.count_components(spine) != 1:
        return False
    return all((g.neighbor_mask(v) & spine).bit_count() <= 2 for v in iter_bits(spine))


def recognize_flower(g: Graph) -> Optional[Tuple[int, int, int]]:
    """
    (v, h, k), если g изоморфен F_{h,k}(v) с h + k ≥ 3: удаление v оставляет
    h рёбер {a, b} с a, b ~ v и k путей x - c - y, где с v смежен только c.
    """
    if not g.is_connected():
        return None
    for v in g.vertices:
        h = k = 0
        for component in g.component_masks(g.all_mask & ~(1 << v)):
            touching = g.neighbor_mask(v) & component
            size = component.bit_count()
            inner_edges = sum((g.neighbor_mask(w) & component).bit_count() for w in iter_bits(component)) // 2
            if size == 2 and inner_edges == 1 and touching == component:
                h += 1
            elif size == 3 and inner_edges == 2 and touching.bit_count() == 1:
                center = touching.bit_length() - 1
                if (g.neighbor_mask(center) & component).bit_count() == 2:
                    k += 1
                else:
                    break
            else:
                break
        else:
            if h + k >= 3:
                return v, h, k
    return None
