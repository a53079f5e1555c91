# certificates.py
# Purpose: Upper and lower bounds on q(G) and checkable certificates for them:
#          degree / average 2-degree bound with its equality cases, the clique bound,
#          the star lower bound, interval certificates from a positive witness vector,
#          the explicit witness that proves contraction raises q, and the
#          eigenvector perturbation identity used to compare two graphs.

from __future__ import annotations
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from spex.canon import is_isomorphic
from spex.constructions import clique_with_pendants
from spex.errors import CertificateFailure, InvalidContraction, InvalidEdge, InvalidInput, InvalidWitness
from spex.graph import Edge, Graph, bipartition, bits, clique_number, components, is_connected
from spex.spectral import DEFAULT_TOL, q_radius, signless_laplacian
from spex.transforms import contract, internal_path_edges

log = logging.getLogger(__name__)

STRICT_MARGIN = 1e-12


# ---- Types ----
@dataclass(frozen=True)
class IntervalCertificate:
    alpha: float
    beta: float
    witness: np.ndarray
    one_sided: bool = False     # only the upper side is certified (alpha = -inf)


@dataclass(frozen=True)
class FengYuBound:
    value: float
    regular: bool
    semiregular_bipartite: bool

    @property
    def equality(self) -> bool:
        return self.regular or self.semiregular_bipartite


@dataclass(frozen=True)
class CliqueBound:
    value: float
    omega: int
    equality: bool       # g is K_omega with the remaining edges pendant at one vertex


@dataclass(frozen=True)
class BoundReport:
    feng_yu: float
    clique_bound: float
    star_lower: float
    equality_flags: Dict[str, Optional[str]] = field(default_factory=dict)


@dataclass(frozen=True)
class ContractionResult:
    case: str                                   # "certificate" or "subdivision"
    q_contracted: float
    certificate: Optional[IntervalCertificate]
    note: str = ""


# ---- Degree-based bounds ----
def average_two_degree(g: Graph, u: int) -> float:
    """Mean degree of the neighbours of u."""
    if g.degree(u) == 0:
        raise InvalidInput(f"vertex {u} is isolated")
    return float(Fraction(sum(g.degree(w) for w in bits(g.adjacency[u])), g.degree(u)))


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees())) == 1


def is_semiregular_bipartite(g: Graph) -> bool:
    sides = bipartition(g)
    if sides is None:
        return False
    return all(len({g.degree(v) for v in bits(side)}) <= 1 for side in sides)


def feng_yu_bound(g: Graph) -> FengYuBound:
    """max over u of d(u) + m(u), with the regular / semiregular-bipartite equality cases."""
    if not is_connected(g):
        raise InvalidInput("degree / average 2-degree bound needs a connected graph; apply it per component")
    if g.m == 0:
        raise InvalidInput("graph has no edges")
    value = max(g.degree(u) + average_two_degree(g, u) for u in range(g.n))
    regular = is_regular(g)
    return FengYuBound(value=value, regular=regular, semiregular_bipartite=not regular and is_semiregular_bipartite(g))


def pendant_clique_degree_bound(s: int, t: int) -> int:
    """Degree bound evaluated on K_s^t: 2(s-1) + t."""
    return 2 * (s - 1) + t


def star_lower(g: Graph) -> float:
    """q(K_{1,Delta}) = Delta + 1; a lower bound for q of any graph containing that star."""
    return float(g.max_degree() + 1)


# ---- Clique bound ----
def clique_bound(g: Graph, tol: float = DEFAULT_TOL) -> CliqueBound:
    """q of K_omega with m - C(omega, 2) pendant edges at one vertex."""
    if g.m == 0:
        raise InvalidInput("graph has no edges")
    omega = clique_number(g)
    extremal = clique_with_pendants(omega, g.m - math.comb(omega, 2))
    value = q_radius(extremal, tol).q
    core = g.induced([v for v in range(g.n) if g.degree(v)])
    return CliqueBound(value=value, omega=omega, equality=is_isomorphic(core, extremal))


def clique_bound_monotone(m: int, tol: float = DEFAULT_TOL) -> Tuple[List[Tuple[int, float]], bool]:
    """q(K_w^{m - C(w,2)}) for w = 3, 4, ... while C(w, 2) <= m, and whether it strictly decreases."""
    values = []
    w = 3
    while math.comb(w, 2) <= m:
        values.append((w, q_radius(clique_with_pendants(w, m - math.comb(w, 2)), tol).q))
        w += 1
    decreasing = all(a[1] > b[1] + STRICT_MARGIN for a, b in zip(values, values[1:]))
    return values, decreasing


def bound_report(g: Graph, tol: float = DEFAULT_TOL) -> BoundReport:
    """All three bounds; disconnected inputs take the largest degree bound over non-trivial components."""
    if not g.m:
        raise InvalidInput("graph has no edges")
    flags: Dict[str, Optional[str]] = {"feng_yu": None, "clique_bound": None, "star_lower": None}
    parts = [c for c in components(g) if c.m] if not is_connected(g) else [g]
    fy = max((feng_yu_bound(c) for c in parts), key=lambda b: b.value)
    if fy.regular:
        flags["feng_yu"] = "regular"
    elif fy.semiregular_bipartite:
        flags["feng_yu"] = "semiregular-bipartite"
    cb = clique_bound(g, tol)
    if cb.equality:
        flags["clique_bound"] = f"K_{cb.omega}^{g.m - math.comb(cb.omega, 2)}"
    if g.m == g.max_degree():
        flags["star_lower"] = "star"
    return BoundReport(feng_yu=fy.value, clique_bound=cb.value, star_lower=star_lower(g), equality_flags=flags)


# ---- Interval certificates ----
def _witness(g: Graph, Y: Sequence[float]) -> np.ndarray:
    y = np.asarray(Y, dtype=float)
    if y.shape != (g.n,):
        raise InvalidWitness(f"witness has shape {y.shape}, expected ({g.n},)")
    if not np.all(y > 0):
        raise InvalidWitness("witness must be strictly positive")
    return y


def interval_certificate(g: Graph, Y: Sequence[float], alpha: float, beta: float,
                         margin: float = STRICT_MARGIN) -> Optional[IntervalCertificate]:
    """Accept iff alpha*Y < Q*Y < beta*Y holds entrywise with the strictness margin; None otherwise."""
    y = _witness(g, Y)
    y = y / y.max()
    qy = signless_laplacian(g) @ y
    if np.all(qy - alpha * y > margin) and np.all(beta * y - qy > margin):
        return IntervalCertificate(alpha=float(alpha), beta=float(beta), witness=y)
    return None


def contraction_certificate(g: Graph, u: int, v: int, tol: float = DEFAULT_TOL) -> ContractionResult:
    """Witness Y with Q(g) Y <= q Y (one entry strictly), q = q(g contracted along uv), so q(g) < q.

    Y copies the Perron vector X of the contracted graph except at u and v, where
        y_u = (sum x_{v_i} + (q - t - 1) sum x_{u_i}) / p
        y_v = (sum x_{u_i} + (q - s - 1) sum x_{v_i}) / p,   p = (q - t - 1)(q - s - 1) - 1,
    with u_1..u_s = N(u) - v and v_1..v_t = N(v) - u.
    """
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise InvalidEdge(f"({u},{v}) is not an edge")
    if g.adjacency[u] & g.adjacency[v]:
        raise InvalidContraction(f"{u} and {v} have a common neighbour")
    contracted = contract(g, u, v)
    spec = q_radius(contracted, tol)
    q = spec.q
    if min(g.degree(u), g.degree(v)) < 3:
        return ContractionResult(case="subdivision", q_contracted=q, certificate=None,
                                 note="an endpoint has degree <= 2: g subdivides the contracted graph, "
                                      "so the subdivision bound applies")
    if not is_connected(g):
        raise InvalidInput("contraction certificate needs a connected graph")
    if tuple(sorted((u, v))) not in internal_path_edges(g):
        raise InvalidInput(f"({u},{v}) does not lie on an internal path")

    lo, hi = min(u, v), max(u, v)

    def label(w: int) -> int:      # vertex id of w in the contracted graph
        return lo if w == hi else (w - 1 if w > hi else w)

    x = spec.perron
    us = [w for w in bits(g.adjacency[u]) if w != v]
    vs = [w for w in bits(g.adjacency[v]) if w != u]
    s, t = len(us), len(vs)
    sum_u = sum(x[label(w)] for w in us)
    sum_v = sum(x[label(w)] for w in vs)
    p = (q - t - 1) * (q - s - 1) - 1

    y = np.array([x[label(w)] for w in range(g.n)])
    y[u] = (sum_v + (q - t - 1) * sum_u) / p
    y[v] = (sum_u + (q - s - 1) * sum_v) / p
    if not np.all(y > 0):
        raise CertificateFailure(f"contraction witness is not positive: min entry {y.min():.3e}")

    gap = q * y - signless_laplacian(g) @ y
    slack = 1e3 * tol * max(1.0, q)
    if gap.min() < -slack or gap.max() <= STRICT_MARGIN:
        raise CertificateFailure(
            f"Q(G)Y <= qY fails for contraction of ({u},{v}): min gap {gap.min():.3e}, max gap {gap.max():.3e}")
    log.debug("contraction certificate (%d,%d): q=%.12f max gap %.3e", u, v, q, gap.max())
    return ContractionResult(
        case="certificate", q_contracted=q,
        certificate=IntervalCertificate(alpha=-math.inf, beta=q, witness=y, one_sided=True),
    )


# ---- Perturbation identity ----
def perturbation_identity(g: Graph, g2: Graph, added: Iterable[Edge], removed: Iterable[Edge],
                          tol: float = DEFAULT_TOL) -> Tuple[float, float]:
    """(X.Y)(q(g2) - q(g)) and the edge-sum difference it equals, X and Y the Perron vectors of g and g2."""
    added = {tuple(sorted(e)) for e in added}
    removed = {tuple(sorted(e)) for e in removed}
    if g.n != g2.n or (set(g.edges) - removed) | added != set(g2.edges) or not removed <= set(g.edges):
        raise InvalidInput("g2 is not g with `removed` deleted and `added` inserted on the same vertex set")
    first, second = q_radius(g, tol), q_radius(g2, tol)
    x, y = first.perron, second.perron
    lhs = float(x @ y) * (second.q - first.q)
    rhs = sum((x[a] + x[b]) * (y[a] + y[b]) for a, b in added) - \
          sum((x[a] + x[b]) * (y[a] + y[b]) for a, b in removed)
    return lhs, float(rhs)
