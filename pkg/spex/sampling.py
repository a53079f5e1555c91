# sampling.py
# Purpose: Seeded random graphs for the property suites. Every sampler takes a
#          numpy Generator so a suite is reproducible from its seed alone.

from __future__ import annotations
from itertools import combinations
from typing import List, Optional, Tuple

import numpy as np

from spex.graph import Graph, from_edge_list, is_connected

N_RANGE = (5, 10)
EDGE_PROBABILITIES = (0.3, 0.5)
MAX_REJECTIONS = 1000


def random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    """G(n, p) on vertices 0..n-1."""
    pairs = list(combinations(range(n), 2))
    keep = rng.random(len(pairs)) < p
    return from_edge_list(n, [e for e, k in zip(pairs, keep) if k])


def random_connected_graph(rng: np.random.Generator, n_range: Tuple[int, int] = N_RANGE) -> Graph:
    """Uniform n in n_range, p from EDGE_PROBABILITIES, resampled until connected."""
    while True:
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        p = float(rng.choice(EDGE_PROBABILITIES))
        g = random_graph(rng, n, p)
        if g.m and is_connected(g):
            return g


def random_disconnected_graph(rng: np.random.Generator, parts: Optional[int] = None) -> Graph:
    """Disjoint union of 2 or 3 small random connected graphs (no isolated vertices)."""
    count = parts or int(rng.integers(2, 4))
    edges, offset = [], 0
    for _ in range(count):
        piece = random_connected_graph(rng, (2, 6))
        edges.extend((a + offset, b + offset) for a, b in piece.edges)
        offset += piece.n
    return from_edge_list(offset, edges)


def bridged_pair(rng: np.random.Generator) -> Tuple[Graph, Tuple[int, int]]:
    """Two random connected graphs joined by a path between vertices of degree >= 2.

    Both ends of the joining path end up with degree >= 3, so every edge on it is a cut
    edge lying on an internal path. Returns the graph and one such edge.
    """
    while True:
        left = random_connected_graph(rng, (3, 6))
        right = random_connected_graph(rng, (3, 6))
        a_pool = [v for v in range(left.n) if left.degree(v) >= 2]
        b_pool = [v for v in range(right.n) if right.degree(v) >= 2]
        if a_pool and b_pool:
            break
    a = int(rng.choice(a_pool))
    b = left.n + int(rng.choice(b_pool))
    length = int(rng.integers(1, 4))           # edges on the joining path
    edges = list(left.edges) + [(x + left.n, y + left.n) for x, y in right.edges]
    n = left.n + right.n
    prev = a
    for _ in range(length - 1):
        edges.append((prev, n))
        prev, n = n, n + 1
    edges.append((prev, b))
    g = from_edge_list(n, edges)
    path_edges = [e for e in g.edges if e not in set(left.edges) and
                  e not in {(x + left.n, y + left.n) for x, y in right.edges}]
    u, v = path_edges[int(rng.integers(len(path_edges)))]
    return g, (u, v)


def random_vector(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.standard_normal(n)


def pick(rng: np.random.Generator, items: List):
    return items[int(rng.integers(len(items)))]
