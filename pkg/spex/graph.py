# graph.py
# Purpose: Immutable simple undirected graph stored as per-vertex neighbour bitsets,
#          plus the structural parameters the extremal families are defined by
#          (girth, circumference, clique number, connectivity).

from __future__ import annotations
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from spex.errors import InvalidEdge, InvalidInput

MAX_VERTICES = 62   # graph6 short form: N(n) is a single byte

Edge = Tuple[int, int]


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---- Graph type ----
@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: Tuple[int, ...]
    edges: Tuple[Edge, ...]
    _degrees: Tuple[int, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        if not self._degrees:
            object.__setattr__(self, "_degrees", tuple(row.bit_count() for row in self.adjacency))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return self._degrees[u]

    def degrees(self) -> Tuple[int, ...]:
        return self._degrees

    def max_degree(self) -> int:
        return max(self._degrees, default=0)

    def neighbors(self, u: int) -> List[int]:
        return list(bits(self.adjacency[u]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def has_isolated_vertex(self) -> bool:
        return 0 in self._degrees

    def with_edges(self, added: Iterable[Edge] = (), removed: Iterable[Edge] = (), n: Optional[int] = None) -> "Graph":
        """Return a new graph with `removed` deleted and `added` inserted (optionally on more vertices)."""
        drop = {_norm(e) for e in removed}
        kept = [e for e in self.edges if e not in drop]
        return from_edge_list(self.n if n is None else n, kept + [_norm(e) for e in added])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex v of self becomes vertex perm[v] of the result."""
        return from_edge_list(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph on `vertices`, relabelled 0..k-1 in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        return from_edge_list(
            len(vertices),
            [(index[u], index[v]) for u, v in self.edges if u in index and v in index],
        )

    def __str__(self):
        return f"Graph(n={self.n}, m={self.m}, edges={list(self.edges)})"


def _norm(e: Edge) -> Edge:
    u, v = e
    return (u, v) if u < v else (v, u)


def from_edge_list(n: int, edges: Iterable[Edge]) -> Graph:
    """Build a Graph on vertices 0..n-1; duplicate and reversed pairs collapse to one edge."""
    if n < 1 or n > MAX_VERTICES:
        raise InvalidInput(f"vertex count {n} outside 1..{MAX_VERTICES}")
    adjacency = [0] * n
    seen = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InvalidEdge(f"self-loop at vertex {u}")
        e = _norm((u, v))
        if e in seen:
            continue
        seen.add(e)
        adjacency[u] |= 1 << v
        adjacency[v] |= 1 << u
    return Graph(n=n, adjacency=tuple(adjacency), edges=tuple(sorted(seen)))


# ---- Connectivity ----
def _reach(g: Graph, start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adjacency[u]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def component_masks(g: Graph) -> List[int]:
    """Vertex bitmask of each connected component, ordered by smallest vertex."""
    remaining = (1 << g.n) - 1
    masks = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = _reach(g, start, remaining)
        masks.append(comp)
        remaining &= ~comp
    return masks


def is_connected(g: Graph) -> bool:
    return _reach(g, 0, (1 << g.n) - 1) == (1 << g.n) - 1


def components(g: Graph) -> List[Graph]:
    """Connected components as graphs; vertex order inside each follows the parent ids."""
    return [g.induced(list(bits(mask))) for mask in component_masks(g)]


def bipartition(g: Graph) -> Optional[Tuple[int, int]]:
    """BFS 2-colouring. Returns (side0, side1) bitmasks, or None when an odd cycle exists."""
    colour = [-1] * g.n
    for root in range(g.n):
        if colour[root] != -1:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in bits(g.adjacency[u]):
                if colour[w] == -1:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    side0 = sum(1 << v for v in range(g.n) if colour[v] == 0)
    return side0, ((1 << g.n) - 1) & ~side0


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


# ---- Cycles ----
def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle (BFS from every vertex), or None for a forest."""
    best = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:      # nothing shorter left below u
                break
            for w in bits(g.adjacency[u]):
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def two_core(g: Graph) -> int:
    """Bitmask of the 2-core: repeatedly strip vertices of degree <= 1. Every cycle lives here."""
    alive = (1 << g.n) - 1
    changed = True
    while changed:
        changed = False
        for u in bits(alive):
            if (g.adjacency[u] & alive).bit_count() <= 1:
                alive &= ~(1 << u)
                changed = True
    return alive


def _longest_cycle_search(g: Graph, collect: bool) -> Tuple[int, List[Tuple[int, ...]]]:
    """DFS over simple cycles rooted at their smallest vertex, pruned by the vertices still reachable.

    Returns the circumference (0 when acyclic) and, when collect is set, every longest
    cycle as a vertex sequence starting at its smallest vertex (each cycle once per direction).
    """
    core = two_core(g)
    best = 0
    found: List[Tuple[int, ...]] = []
    adj = g.adjacency

    for s in bits(core):
        pool = core & ~((1 << (s + 1)) - 1)          # vertices > s still allowed
        reach = _reach(g, s, pool | (1 << s))
        if reach.bit_count() < 3 or reach.bit_count() < best or (not collect and reach.bit_count() == best):
            continue
        path = [s]

        def dfs(u: int, used: int):
            nonlocal best, found
            avail = reach & ~used
            bound = len(path) + _reach(g, u, avail | (1 << u)).bit_count() - 1
            if bound < best or (not collect and bound == best):
                return
            if len(path) >= 3 and adj[u] >> s & 1:
                length = len(path)
                if length > best:
                    best = length
                    found = []
                if collect and length == best and path[1] < path[-1]:
                    found.append(tuple(path))
            for w in bits(adj[u] & avail):
                path.append(w)
                dfs(w, used | (1 << w))
                path.pop()

        dfs(s, 1 << s)
    return best, found


def circumference(g: Graph) -> Optional[int]:
    """Length of a longest cycle, or None for a forest."""
    best, _ = _longest_cycle_search(g, collect=False)
    return best or None


def longest_cycles(g: Graph) -> List[Tuple[int, ...]]:
    """All longest cycles, each once, as vertex sequences starting at the smallest vertex."""
    _, found = _longest_cycle_search(g, collect=True)
    return sorted(found)


# ---- Cliques ----
def clique_number(g: Graph) -> int:
    """Exact clique number by branch and bound with a greedy-colouring upper bound."""
    best = 1 if g.n else 0

    def colour_bound(cand: int) -> int:
        colours = 0
        while cand:
            colours += 1
            free = cand
            while free:
                v = (free & -free).bit_length() - 1
                free &= ~g.adjacency[v] & ~(1 << v)
                cand &= ~(1 << v)
        return colours

    def expand(size: int, cand: int):
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + colour_bound(cand) <= best:
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = (cand & -cand).bit_length() - 1
            expand(size + 1, cand & g.adjacency[v])
            cand &= ~(1 << v)

    expand(0, (1 << g.n) - 1)
    return best


# ---- Domination / covers ----
def closed_neighborhood(g: Graph, u: int) -> int:
    return g.adjacency[u] | (1 << u)


def is_dominating(g: Graph, u: int, vertices: Optional[Iterable[int]] = None) -> bool:
    """True when u dominates `vertices` (default: every vertex), i.e. they lie in N[u]."""
    target = (1 << g.n) - 1 if vertices is None else sum(1 << v for v in set(vertices))
    return target & ~closed_neighborhood(g, u) == 0


def is_vertex_cover(g: Graph, vertices: Iterable[int]) -> bool:
    cover = sum(1 << v for v in set(vertices))
    return all(cover >> u & 1 or cover >> v & 1 for u, v in g.edges)


def is_bridge(g: Graph, u: int, v: int) -> bool:
    """True when uv is an edge whose removal separates u from v."""
    if not g.has_edge(u, v):
        return False
    everything = (1 << g.n) - 1
    seen = 1 << u
    frontier = seen
    while frontier:
        nxt = 0
        for x in bits(frontier):
            row = g.adjacency[x]
            if x == u:
                row &= ~(1 << v)
            nxt |= row
        nxt &= everything & ~seen
        seen |= nxt
        frontier = nxt
    return not seen >> v & 1
