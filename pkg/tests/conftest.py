"""Shared corpus builders for the test suite."""

import numpy as np
import pytest

from alphaspec import Graph, complete, complete_bipartite, cycle, path, star


def rand_graph(rng, n: int, p: float) -> Graph:
    """Bernoulli(p) graph on n labeled vertices."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, tuple(edges))


def rand_connected(rng, n: int, extra: int = 0) -> Graph:
    """Random tree by incremental attachment, plus up to `extra` extra edges."""
    edges = set()
    for v in range(1, n):
        u = int(rng.integers(0, v))
        edges.add((u, v))
    non_edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if (u, v) not in edges]
    if extra and non_edges:
        take = min(extra, len(non_edges))
        for idx in rng.choice(len(non_edges), size=take, replace=False):
            edges.add(non_edges[int(idx)])
    return Graph(n, tuple(edges))


def named_corpus() -> list[Graph]:
    return [
        complete(1),
        complete(2),
        complete(5),
        path(2),
        path(6),
        cycle(3),
        cycle(6),
        star(5),
        complete_bipartite(3, 4),
        Graph(5, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2))),
    ]


@pytest.fixture
def rng():
    return np.random.default_rng(20260819)


@pytest.fixture
def corpus():
    return named_corpus()
