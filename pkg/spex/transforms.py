# transforms.py
# Purpose: Graph surgery whose effect on q is known: switching neighbours from v to u,
#          subdividing and contracting edges, merging components, plus internal-path detection.
#          Every transform returns a new graph.

from __future__ import annotations
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from spex.errors import InvalidContraction, InvalidEdge, InvalidInput, InvalidSwitch
from spex.graph import Edge, Graph, bits, component_masks, from_edge_list


@dataclass(frozen=True)
class InternalPath:
    vertices: Tuple[int, ...]   # u_1 ... u_k, k >= 2; u_1 == u_k allowed

    @property
    def endpoints(self) -> Tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    def edges(self) -> List[Edge]:
        return [tuple(sorted(p)) for p in zip(self.vertices, self.vertices[1:])]


def _require_edge(g: Graph, u: int, v: int):
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise InvalidEdge(f"({u},{v}) is not an edge")


# ---- Switching ----
def switch(g: Graph, u: int, v: int, S: Iterable[int]) -> Graph:
    """Delete the edges v-s and add u-s for every s in S."""
    S = sorted(set(S))
    if u == v:
        raise InvalidSwitch("u and v must differ")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise InvalidSwitch(f"vertex out of range: u={u}, v={v}")
    for s in S:
        if s == u:
            raise InvalidSwitch("u cannot be moved onto itself")
        if not g.has_edge(v, s) or g.has_edge(u, s):
            raise InvalidSwitch(f"{s} is not in N({v}) \\ N({u})")
    return g.with_edges(added=[(u, s) for s in S], removed=[(v, s) for s in S])


def switchable(g: Graph, u: int, v: int) -> List[int]:
    """N(v) minus N[u]: the largest set that switch(g, u, v, S) accepts."""
    return list(bits(g.adjacency[v] & ~g.adjacency[u] & ~(1 << u)))


# ---- Subdivision / contraction ----
def subdivide(g: Graph, u: int, v: int) -> Graph:
    """Replace uv by a path u-w-v through the new vertex w = n."""
    _require_edge(g, u, v)
    w = g.n
    return g.with_edges(added=[(u, w), (w, v)], removed=[(u, v)], n=g.n + 1)


def contract(g: Graph, u: int, v: int) -> Graph:
    """Delete uv and identify u, v. The merged vertex keeps min(u, v); ids above max(u, v) shift down."""
    _require_edge(g, u, v)
    if g.adjacency[u] & g.adjacency[v]:
        common = list(bits(g.adjacency[u] & g.adjacency[v]))
        raise InvalidContraction(f"{u} and {v} share neighbours {common}")
    lo, hi = min(u, v), max(u, v)

    def label(x: int) -> int:
        if x == hi:
            return lo
        return x - 1 if x > hi else x

    edges = [(label(a), label(b)) for a, b in g.edges if {a, b} != {u, v}]
    return from_edge_list(g.n - 1, edges)


def add_pendant(g: Graph, u: int) -> Graph:
    if not 0 <= u < g.n:
        raise InvalidInput(f"vertex {u} out of range")
    return g.with_edges(added=[(u, g.n)], n=g.n + 1)


def contract_and_extend(g: Graph, u: int, v: int) -> Graph:
    """Contract uv and hang a new pendant at the merged vertex, keeping the edge count."""
    return add_pendant(contract(g, u, v), min(u, v))


def merge_components(g: Graph, reps: Optional[Sequence[int]] = None) -> Graph:
    """Identify one representative vertex per component into a single vertex.

    `reps` defaults to the smallest vertex of every component. The merged vertex takes the
    smallest representative's id; the remaining vertices are renumbered in order.
    """
    masks = component_masks(g)
    if reps is None:
        reps = [(mask & -mask).bit_length() - 1 for mask in masks]
    if len(reps) != len(masks) or any(sum(1 for r in reps if mask >> r & 1) != 1 for mask in masks):
        raise InvalidInput("need exactly one representative per component")
    hub = min(reps)
    dropped = set(reps) - {hub}
    new_id, nxt = {}, 0
    for x in range(g.n):
        if x in dropped:
            continue
        new_id[x] = nxt
        nxt += 1
    for r in dropped:
        new_id[r] = new_id[hub]
    return from_edge_list(nxt, [(new_id[a], new_id[b]) for a, b in g.edges])


# ---- Internal paths ----
def find_internal_paths(g: Graph) -> List[InternalPath]:
    """All maximal internal paths: ends of degree >= 3, interior of degree 2, each once."""
    found = set()
    for start in range(g.n):
        if g.degree(start) < 3:
            continue
        for first in bits(g.adjacency[start]):
            walk = [start, first]
            prev, cur = start, first
            while g.degree(cur) == 2 and cur != start:
                nxt = next(w for w in bits(g.adjacency[cur]) if w != prev)
                walk.append(nxt)
                prev, cur = cur, nxt
            if g.degree(cur) < 3:
                continue        # ran into a pendant path
            seq = tuple(walk)
            found.add(min(seq, seq[::-1]))
    return [InternalPath(vertices=p) for p in sorted(found)]


def internal_path_edges(g: Graph) -> List[Edge]:
    """Every edge lying on some internal path."""
    edges = {e for p in find_internal_paths(g) for e in p.edges()}
    return sorted(edges)
