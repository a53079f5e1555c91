# canon.py
# Purpose: Canonical labelling for isomorphism-free work.
#          Colour refinement, then individualisation/refinement backtracking that keeps the
#          lexicographically least relabelled adjacency, with automorphism pruning.

from __future__ import annotations
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from spex.graph import Graph, bits
from spex.graph6 import to_graph6


@dataclass(frozen=True)
class CanonicalForm:
    bytes: str                     # graph6 of the canonical graph
    permutation: Tuple[int, ...]   # input vertex v -> canonical vertex permutation[v]


def _refine(adj: Tuple[int, ...], cells: List[int]) -> List[int]:
    """Split cells by neighbour counts into every other cell until the ordered partition is equitable."""
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(cells):
            splitter = cells[i]
            refined = []
            for cell in cells:
                if cell & (cell - 1) == 0:
                    refined.append(cell)
                    continue
                groups: Dict[int, int] = {}
                for v in bits(cell):
                    k = (adj[v] & splitter).bit_count()
                    groups[k] = groups.get(k, 0) | (1 << v)
                if len(groups) > 1:
                    changed = True
                    refined.extend(groups[k] for k in sorted(groups))
                else:
                    refined.append(cell)
            cells = refined
            i += 1
    return cells


def _initial_cells(g: Graph) -> List[int]:
    by_degree: Dict[int, int] = {}
    for v in range(g.n):
        by_degree[g.degree(v)] = by_degree.get(g.degree(v), 0) | (1 << v)
    return [by_degree[d] for d in sorted(by_degree)]


class _Search:
    def __init__(self, g: Graph):
        self.adj = g.adjacency
        self.n = g.n
        self.first: Optional[tuple] = None   # (certificate, labelling, path)
        self.best: Optional[tuple] = None
        self.autos: List[List[int]] = []
        # twins (equal neighbourhoods outside the pair) can always be swapped
        self.twins: List[Tuple[int, int]] = [
            (u, v)
            for u in range(g.n) for v in range(u + 1, g.n)
            if self.adj[u] & ~(1 << v) == self.adj[v] & ~(1 << u)
        ]

    def certificate(self, lab: List[int]) -> Tuple[int, ...]:
        pos = [0] * self.n
        for i, v in enumerate(lab):
            pos[v] = i
        return tuple(sum(1 << pos[u] for u in bits(self.adj[v])) for v in lab)

    def _orbit_roots(self, fixed: List[int]) -> List[int]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

        pinned = set(fixed)
        for a, b in self.twins:
            if a not in pinned and b not in pinned:
                union(a, b)
        for gamma in self.autos:
            if all(gamma[v] == v for v in fixed):
                for v in range(self.n):
                    union(v, gamma[v])
        return [find(v) for v in range(self.n)]

    def _leaf(self, cells: List[int], path: List[int]) -> Optional[int]:
        lab = [c.bit_length() - 1 for c in cells]
        cert = self.certificate(lab)
        if self.first is None:
            self.first = self.best = (cert, lab, list(path))
            return None
        for ref in (self.first, self.best):
            if cert == ref[0]:
                gamma = [0] * self.n
                for a, b in zip(ref[1], lab):
                    gamma[a] = b
                self.autos.append(gamma)
                common = 0
                while common < len(path) and path[common] == ref[2][common]:
                    common += 1
                return common
        if cert < self.best[0]:
            self.best = (cert, lab, list(path))
        return None

    def run(self, cells: List[int], path: List[int]) -> Optional[int]:
        """Explore the subtree below `cells`; returns a level to jump back to, or None."""
        target_index = next((i for i, c in enumerate(cells) if c & (c - 1)), None)
        if target_index is None:
            return self._leaf(cells, path)
        level = len(path)
        target = cells[target_index]
        explored: List[int] = []
        for v in bits(target):
            if explored:
                roots = self._orbit_roots(path)
                if any(roots[v] == roots[w] for w in explored):
                    continue
            explored.append(v)
            child = cells[:target_index] + [1 << v, target & ~(1 << v)] + cells[target_index + 1:]
            path.append(v)
            jump = self.run(_refine(self.adj, child), path)
            path.pop()
            if jump is not None and jump < level:
                return jump
        return None


def canonical_labelling(g: Graph) -> Tuple[int, ...]:
    """Permutation taking g to its canonical relabelling."""
    search = _Search(g)
    search.run(_refine(g.adjacency, _initial_cells(g)), [])
    lab = search.best[1]
    perm = [0] * g.n
    for i, v in enumerate(lab):
        perm[v] = i
    return tuple(perm)


def canonical_form(g: Graph) -> CanonicalForm:
    perm = canonical_labelling(g)
    return CanonicalForm(bytes=to_graph6(g.relabel(perm)), permutation=perm)


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labelling(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if (g.n, g.m, sorted(g.degrees())) != (h.n, h.m, sorted(h.degrees())):
        return False
    return canonical_form(g).bytes == canonical_form(h).bytes
