"""Shared helpers for the test suite."""

from __future__ import annotations

import heapq
import random

from orientcorr import Graph, graph_from_edges, path_graph


def diamond() -> Graph:
    """K4 minus the edge {0, 1}: vertices 0, 1 have degree 2; 2, 3 degree 3."""
    return graph_from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def star(n: int) -> Graph:
    """Star with center n - 1, matching the 'D?{' golden layout for n = 5."""
    return graph_from_edges(n, [(v, n - 1) for v in range(n - 1)])


def tree_from_pruefer(n: int, seq: list[int]) -> Graph:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return graph_from_edges(n, edges)


def tree_corpus(minimum: int = 50) -> list[Graph]:
    """A deterministic set of distinct trees on 3..8 vertices.

    Hand-built paths, stars and caterpillars, topped up with seeded random
    Pruefer codes until at least `minimum` distinct trees are collected.
    """
    trees: list[Graph] = []
    seen: set[Graph] = set()

    def add(g: Graph) -> None:
        if g not in seen:
            seen.add(g)
            trees.append(g)

    for n in range(3, 9):
        add(path_graph(n))
    for n in range(4, 9):
        add(star(n))
    # Caterpillars: a spine with legs hanging off interior spine vertices.
    add(graph_from_edges(6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]))
    add(graph_from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (3, 6)]))
    add(graph_from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 6), (2, 7)]))
    rng = random.Random(20240901)
    while len(trees) < minimum:
        n = rng.randint(5, 8)
        seq = [rng.randrange(n) for _ in range(n - 2)]
        add(tree_from_pruefer(n, seq))
    return trees


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return graph_from_edges(n, edges)
