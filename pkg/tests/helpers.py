"""Small ordered graphs used across the tests."""

from ordconflict.models.ordered_graph import OrderedGraph, complete_graph


def k(n, start=1, step=1):
    """K_n on start, start + step, ..., laid out left to right."""
    return complete_graph([start + step * i for i in range(n)])


def path(*edges):
    """The ordered graph spanned by some edges."""
    vertices = sorted(set(v for edge in edges for v in edge))

    return OrderedGraph(vertices, edges)
