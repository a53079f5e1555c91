# constructions.py
# Purpose: Named graph generators for every family the extremal results refer to.
#          Labelling is deterministic with the hub at vertex 0, so graph6 output is reproducible.

from __future__ import annotations
from itertools import combinations

from spex.errors import InvalidParameter
from spex.graph import Graph, from_edge_list


def _require(ok: bool, message: str):
    if not ok:
        raise InvalidParameter(message)


# ---- Standard graphs ----
def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on n vertices (n - 1 edges)."""
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star(t: int) -> Graph:
    """K_{1,t}: centre 0, leaves 1..t."""
    _require(t >= 1, f"star needs t >= 1, got {t}")
    return from_edge_list(t + 1, [(0, i) for i in range(1, t + 1)])


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    return from_edge_list(n, combinations(range(n), 2))


def complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t}: side 0..s-1 and side s..s+t-1."""
    _require(s >= 1 and t >= 1, f"complete bipartite needs s, t >= 1, got ({s}, {t})")
    return from_edge_list(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def theta(a: int, b: int, c: int) -> Graph:
    """Two hubs 0 and 1 joined by three internally disjoint paths with a, b, c edges."""
    _require(min(a, b, c) >= 1 and sorted((a, b, c))[1] >= 2, f"theta({a},{b},{c}) is not simple")
    edges, n = [], 2
    for length in (a, b, c):
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, n))
            prev, n = n, n + 1
        edges.append((prev, 1))
    return from_edge_list(n, edges)


def dumbbell(k: int = 3, bridge: int = 1) -> Graph:
    """Two copies of K_k joined by a path with `bridge` edges between vertex 0 of each."""
    _require(k >= 3 and bridge >= 1, f"dumbbell needs k >= 3 and bridge >= 1, got ({k}, {bridge})")
    edges = list(combinations(range(k), 2)) + [(k + i, k + j) for i, j in combinations(range(k), 2)]
    n = 2 * k
    prev = 0
    for _ in range(bridge - 1):
        edges.append((prev, n))
        prev, n = n, n + 1
    edges.append((prev, k))
    return from_edge_list(n, edges)


# ---- Extremal constructions ----
def g_extremal(m: int, g: int) -> Graph:
    """G_{m,g}: cycle 0..g-1 with m - g pendant vertices at vertex 0."""
    _require(g >= 3, f"girth must be >= 3, got {g}")
    _require(m >= g, f"G_(m,g) needs m >= g, got m={m}, g={g}")
    edges = [(i, (i + 1) % g) for i in range(g)]
    edges += [(0, v) for v in range(g, m)]
    return from_edge_list(m, edges)


def h_extremal(m: int, c: int) -> Graph:
    """H_{m,c}: cycle 0..c-1, vertex 0 joined to 2..c-2 and to m - 2c + 3 pendant vertices."""
    _require(c >= 3, f"circumference must be >= 3, got {c}")
    _require(m >= 2 * c - 3, f"H_(m,c) needs m >= 2c-3, got m={m}, c={c}")
    edges = [(i, (i + 1) % c) for i in range(c)]
    edges += [(0, v) for v in range(2, c - 1)]
    pendants = m - 2 * c + 3
    edges += [(0, c + i) for i in range(pendants)]
    return from_edge_list(c + pendants, edges)


def clique_with_pendants(w: int, t: int) -> Graph:
    """K_w^t: complete graph on 0..w-1 with t pendant vertices at vertex 0."""
    _require(w >= 2, f"clique order must be >= 2, got {w}")
    _require(t >= 0, f"pendant count must be >= 0, got {t}")
    edges = list(combinations(range(w), 2)) + [(0, w + i) for i in range(t)]
    return from_edge_list(w + t, edges)
