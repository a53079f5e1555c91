# enumeration.py
# Purpose: Isomorphism-free generation of every graph with exactly m edges and no isolated
#          vertices, filtered by girth or circumference.
#
#          Graphs with k edges are grown from graphs with k - 1 edges by adding one edge
#          (between two old vertices, an old and a new vertex, or two new vertices). A child
#          is kept only when deleting its canonical edge gives back the parent's class, so each
#          class is produced exactly once and parents can be expanded independently in shards.

from __future__ import annotations
import logging
import math
import time
from collections import OrderedDict
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Dict, Iterator, List, Optional, Tuple

from joblib import Parallel, delayed
from threadpoolctl import threadpool_limits

from spex.canon import canonical_form
from spex.errors import EmptyFamily, InvalidParameter, ResourceLimit
from spex.graph import Graph, circumference, from_edge_list, girth, is_connected
from spex.graph6 import parse_graph6, to_graph6
from spex.spectral import DEFAULT_MAX_ITER, DEFAULT_TOL, q_radius

log = logging.getLogger(__name__)

DEFAULT_EDGE_CAP = 12
KINDS = ("none", "girth", "circumference", "circumference_at_least")
PARALLEL_MIN_PARENTS = 64
MAX_CACHED_FAMILIES = 8


# ---- Family description ----
@dataclass(frozen=True)
class FamilySpec:
    m: int
    kind: str = "none"
    value: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidParameter(f"unknown constraint {self.kind!r}; expected one of {KINDS}")
        if self.m < 1:
            raise InvalidParameter(f"edge count must be >= 1, got {self.m}")
        if self.kind != "none" and (self.value is None or self.value < 3):
            raise InvalidParameter(f"{self.kind} must be >= 3, got {self.value}")

    @classmethod
    def girth(cls, m: int, g: int) -> "FamilySpec":
        return cls(m, "girth", g)

    @classmethod
    def circumference(cls, m: int, c: int, at_least: bool = False) -> "FamilySpec":
        return cls(m, "circumference_at_least" if at_least else "circumference", c)

    def matches(self, g: Graph) -> bool:
        if g.m != self.m or g.has_isolated_vertex():
            return False
        if self.kind == "girth":
            return girth(g) == self.value
        if self.kind == "circumference":
            return circumference(g) == self.value
        if self.kind == "circumference_at_least":
            return (circumference(g) or 0) >= self.value
        return True

    @property
    def prune_key(self) -> Tuple[str, Optional[int]]:
        """Constraint that every subgraph of a family member also satisfies."""
        if self.kind == "girth":
            return ("girth_at_least", self.value)
        if self.kind == "circumference":
            return ("circumference_at_most", self.value)
        return ("none", None)

    def describe(self) -> str:
        labels = {"girth": "girth=", "circumference": "circumference=", "circumference_at_least": "circumference>="}
        return f"m={self.m}" + (f",{labels[self.kind]}{self.value}" if self.kind != "none" else "")


@dataclass(frozen=True)
class EnumerationStats:
    generated: int      # candidate children before deduplication
    unique: int         # isomorphism classes produced at the final level
    matching: int       # classes satisfying the constraint
    wall_time: float


def _admissible(g: Graph, key: Tuple[str, Optional[int]]) -> bool:
    kind, value = key
    if kind == "girth_at_least":
        found = girth(g)
        return found is None or found >= value
    if kind == "circumference_at_most":
        found = circumference(g)
        return found is None or found <= value
    return True


# ---- Canonical augmentation ----
def _drop_isolated(g: Graph) -> Graph:
    keep = [v for v in range(g.n) if g.degree(v)]
    return g if len(keep) == g.n else g.induced(keep)


def _candidate_edges(parent: Graph) -> Iterator[Tuple[int, int, int]]:
    """(n_child, u, v) for every way to add one edge without creating an isolated vertex."""
    n = parent.n
    for u, v in combinations(range(n), 2):
        if not parent.has_edge(u, v):
            yield n, u, v
    for u in range(n):
        yield n + 1, u, n
    yield n + 2, n, n + 1


def _edge_invariant(g: Graph, u: int, v: int) -> Tuple[int, int, int]:
    du, dv = g.degree(u), g.degree(v)
    return (min(du, dv), max(du, dv), (g.adjacency[u] & g.adjacency[v]).bit_count())


def children(parent: Graph, parent_code: str) -> Tuple[List[str], int]:
    """Canonical codes of the classes whose canonical parent is `parent`, plus the number of candidates tried.

    The canonical edge of a child is, among its edges with the largest invariant, the one that
    is largest in the canonical labelling. A candidate whose added edge does not reach the largest
    invariant is skipped before labelling: the same child also arises from this parent by adding
    an edge that does.
    """
    seen = set()
    accepted = []
    generated = 0
    for n_child, u, v in _candidate_edges(parent):
        generated += 1
        child = parent.with_edges(added=[(u, v)], n=n_child)
        top = max(_edge_invariant(child, a, b) for a, b in child.edges)
        if _edge_invariant(child, u, v) != top:
            continue
        form = canonical_form(child)
        if form.bytes in seen:
            continue
        seen.add(form.bytes)
        inverse = [0] * child.n
        for old, new in enumerate(form.permutation):
            inverse[new] = old
        a, b = max(
            (e for e in parse_graph6(form.bytes).edges
             if _edge_invariant(child, inverse[e[0]], inverse[e[1]]) == top),
        )
        reduced = _drop_isolated(child.with_edges(removed=[(inverse[a], inverse[b])]))
        if canonical_form(reduced).bytes == parent_code:
            accepted.append(form.bytes)
    return accepted, generated


def _expand_shard(codes: List[str], key: Tuple[str, Optional[int]], prune: bool) -> Tuple[List[str], int, int]:
    kept, generated, unique = [], 0, 0
    for code in codes:
        accepted, tried = children(parse_graph6(code), code)
        generated += tried
        unique += len(accepted)
        if prune:
            kept.extend(c for c in accepted if _admissible(parse_graph6(c), key))
        else:
            kept.extend(accepted)
    return kept, generated, unique


# levels[prune_key][k] = (sorted canonical codes with k + 1 edges, generated, unique);
# least recently used prune keys are evicted beyond MAX_CACHED_FAMILIES
_LEVELS: "OrderedDict[Tuple[str, Optional[int]], List[Tuple[List[str], int, int]]]" = OrderedDict()


def _shards(codes: List[str], workers: int) -> List[List[str]]:
    count = max(1, min(len(codes), workers * 4))
    return [codes[i::count] for i in range(count)]


def _levels(key: Tuple[str, Optional[int]], m: int, workers: int) -> List[Tuple[List[str], int, int]]:
    levels = _LEVELS.setdefault(key, [(["A_"], 1, 1)])     # one edge: K_2
    _LEVELS.move_to_end(key)
    while len(_LEVELS) > MAX_CACHED_FAMILIES:
        evicted, _ = _LEVELS.popitem(last=False)
        log.debug("level cache: evicted %s", evicted)
    while len(levels) < m:
        parents = levels[-1][0]
        prune = key[0] != "none"
        if workers > 1 and len(parents) >= PARALLEL_MIN_PARENTS:
            parts = Parallel(n_jobs=workers)(
                delayed(_expand_shard)(shard, key, prune) for shard in _shards(parents, workers)
            )
        else:
            parts = [_expand_shard(parents, key, prune)]
        codes = sorted(c for part in parts for c in part[0])
        generated = sum(part[1] for part in parts)
        unique = sum(part[2] for part in parts)
        levels.append((codes, generated, unique))
        log.debug("level %d (%s): %d parents -> %d classes kept", len(levels), key, len(parents), len(codes))
    return levels


def clear_cache():
    """Drop every cached level (the cache keeps at most MAX_CACHED_FAMILIES prune keys)."""
    _LEVELS.clear()


def enumerate_family(spec: FamilySpec, workers: int = 1, edge_cap: int = DEFAULT_EDGE_CAP) -> Tuple[List[Graph], EnumerationStats]:
    """One canonical representative per isomorphism class of the family, sorted by graph6."""
    if spec.m > edge_cap:
        raise ResourceLimit(f"m={spec.m} exceeds the edge cap {edge_cap}")
    start = time.perf_counter()
    codes, generated, unique = _levels(spec.prune_key, spec.m, workers)[spec.m - 1]
    graphs = []
    for code in codes:
        g = parse_graph6(code)
        if spec.matches(g):
            graphs.append(g)
    stats = EnumerationStats(generated=generated, unique=unique, matching=len(graphs),
                             wall_time=time.perf_counter() - start)
    log.info("enumerated %s: %d matching of %d classes (%.2fs)", spec.describe(), len(graphs), unique, stats.wall_time)
    return graphs, stats


# ---- Reference enumerator (tests) ----
def _brute_key(g: Graph) -> Tuple:
    """Smallest relabelled edge list over all degree-preserving vertex orders."""
    classes: Dict[int, List[int]] = {}
    for v in range(g.n):
        classes.setdefault(g.degree(v), []).append(v)
    order = sorted(classes)
    best = None
    for parts in product(*(permutations(classes[d]) for d in order)):
        pos, i = {}, 0
        for part in parts:
            for v in part:
                pos[v] = i
                i += 1
        key = tuple(sorted(tuple(sorted((pos[a], pos[b]))) for a, b in g.edges))
        if best is None or key < best:
            best = key
    return (tuple(sorted(g.degrees())), best)


def _connected_classes(k: int) -> List[Graph]:
    """Connected graphs with k edges, by exhaustive edge subsets and permutation-search dedup."""
    found: Dict[Tuple, Graph] = {}
    for n in range(2, k + 2):
        if k > math.comb(n, 2):
            continue
        for edges in combinations(combinations(range(n), 2), k):
            covered = {v for e in edges for v in e}
            if len(covered) != n:
                continue
            g = from_edge_list(n, edges)
            if not is_connected(g):
                continue
            found.setdefault(_brute_key(g), g)
    return list(found.values())


def _disjoint_union(parts: List[Graph]) -> Graph:
    edges, offset = [], 0
    for p in parts:
        edges.extend((a + offset, b + offset) for a, b in p.edges)
        offset += p.n
    return from_edge_list(offset, edges)


def naive_family(spec: FamilySpec) -> List[Graph]:
    """Independent reference: every class as a multiset of connected classes. Practical for m <= 6."""
    by_size = {k: _connected_classes(k) for k in range(1, spec.m + 1)}
    pool = [(k, i) for k in by_size for i in range(len(by_size[k]))]
    out: List[Graph] = []

    def build(remaining: int, start: int, chosen: List[Tuple[int, int]]):
        if remaining == 0:
            g = _disjoint_union([by_size[k][i] for k, i in chosen])
            if spec.matches(g):
                out.append(g)
            return
        for idx in range(start, len(pool)):
            k, _ = pool[idx]
            if k <= remaining:
                build(remaining - k, idx, chosen + [pool[idx]])

    build(spec.m, 0, [])
    return out


# ---- Maximising q over a family ----
VERDICTS = ("confirmed-unique", "confirmed-tied", "refuted", "exploratory")


@dataclass
class ExtremalReport:
    spec: FamilySpec
    maxima: List[Tuple[str, float]]       # (graph6, q) within gap_tol of the maximum
    runner_up_q: Optional[float]          # None when every member is co-maximal
    gap: Optional[float]
    stats: EnumerationStats
    verdict: str = "exploratory"
    expected: Optional[str] = None        # canonical graph6 of the construction the theorem names
    expected_among_maxima: Optional[bool] = None
    gap_tol: float = 1e-9
    notes: List[str] = field(default_factory=list)

    @property
    def q_max(self) -> Optional[float]:
        return self.maxima[0][1] if self.maxima else None


def _q_values(codes: List[str], tol: float, max_iter: int) -> List[float]:
    with threadpool_limits(limits=1):
        return [q_radius(parse_graph6(code), tol, max_iter).q for code in codes]


def family_q_values(graphs: List[Graph], workers: int = 1, tol: float = DEFAULT_TOL,
                    max_iter: int = DEFAULT_MAX_ITER) -> List[float]:
    """q of every graph, in input order, optionally spread over worker processes."""
    codes = [to_graph6(g) for g in graphs]
    if workers > 1 and len(codes) >= PARALLEL_MIN_PARENTS:
        count = min(len(codes), workers * 4)
        bounds = [len(codes) * i // count for i in range(count + 1)]
        parts = Parallel(n_jobs=workers)(
            delayed(_q_values)(codes[lo:hi], tol, max_iter) for lo, hi in zip(bounds, bounds[1:])
        )
        return [q for part in parts for q in part]
    return _q_values(codes, tol, max_iter)


def argmax_q(spec: FamilySpec, gap_tol: float = 1e-9, workers: int = 1, tol: float = DEFAULT_TOL,
             edge_cap: int = DEFAULT_EDGE_CAP, max_iter: int = DEFAULT_MAX_ITER) -> ExtremalReport:
    """Every family member within gap_tol of the largest q, the runner-up value and the gap."""
    graphs, stats = enumerate_family(spec, workers=workers, edge_cap=edge_cap)
    if not graphs:
        raise EmptyFamily(f"no graph matches {spec.describe()}")
    values = family_q_values(graphs, workers, tol, max_iter)
    top = max(values)
    maxima = sorted((to_graph6(g), q) for g, q in zip(graphs, values) if q >= top - gap_tol)
    rest = [q for q in values if q < top - gap_tol]
    runner_up = max(rest) if rest else None
    return ExtremalReport(
        spec=spec, maxima=maxima, runner_up_q=runner_up,
        gap=None if runner_up is None else top - runner_up,
        stats=stats, gap_tol=gap_tol,
    )
