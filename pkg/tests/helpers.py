"""Small graph builders shared by the tests."""

from hgk.graph import SimpleGraph


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(range(1, n + 1), [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph(range(1, n + 1), [(i, i % n + 1) for i in range(1, n + 1)])
